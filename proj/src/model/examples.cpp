#include "sia/model/examples.hpp"

namespace sia::model {

const std::vector<Example>& examples() {
  static const std::vector<Example> catalog = {
      {"competition", "Two-species competition with logistic growth",
       "diff(x1(t),t) = r1*x1(t)*(1 - (x1(t) + x2(t))/k1);\n"
       "diff(x2(t),t) = r2*x2(t)*(1 - (x1(t) + x2(t))/k2);\n"
       "y1(t) = x1(t);\n"
       "y2(t) = x2(t)\n",
       "Classical Lotka-Volterra competition model in a homogeneous environment"},
      {"sirs-forced", "SIRS epidemic model with seasonal forcing",
       "diff(s(t), t) = mu - mu*s(t) - b0*(1 + b1*x1(t))*i(t)*s(t) + g*r(t);\n"
       "diff(i(t), t) = b0*(1 + b1*x1(t))*i(t)*s(t) - (nu + mu)*i(t);\n"
       "diff(r(t), t) = nu*i(t) - (mu + g)*r(t);\n"
       "diff(x1(t), t) = -M*x2(t);\n"
       "diff(x2(t), t) = M*x1(t);\n"
       "y1(t) = i(t);\n"
       "y2(t) = r(t)\n",
       "Capistran, Moreles, Lara (2009), Bull. Math. Biol. 71, recurrent respiratory epidemics"},
      {"tumor", "Tumor targeting with antibodies",
       "diff(x1(t), t) = -(k3 + k7)*x1(t) + k4*x2(t);\n"
       "diff(x2(t), t) = k3*x1(t) - (k4 + (a + b*d)*k5)*x2(t) + k6*(x3(t) + x4(t)) + k5*x2(t)*(x3(t) + x4(t));\n"
       "diff(x3(t), t) = a*k5*x2(t) - k6*x3(t) - k5*x2(t)*x3(t);\n"
       "diff(x4(t), t) = b*d*k5*x2(t) - k6*x4(t) - k5*x2(t)*x4(t);\n"
       "diff(x5(t), t) = k7*x1(t);\n"
       "y1(t) = x5(t)\n",
       "Thomas et al. (1989), Cancer Research 49; system 3 of Saccomani et al. (2010), Comput. Biol. Med. 40"},
      {"lotka-volterra", "Lotka-Volterra predator-prey model",
       "diff(x1(t), t) = a*x1(t) - b*x1(t)*x2(t);\n"
       "diff(x2(t), t) = -c*x2(t) + d*x1(t)*x2(t);\n"
       "y(t) = x1(t)\n",
       "Classical predator-prey model with the prey population observed"},
      {"slow-fast", "Slow-fast ambiguity in a chemical reaction network",
       "diff(xA(t), t) = -k1*xA(t);\n"
       "diff(xB(t), t) = k1*xA(t) - k2*xB(t);\n"
       "diff(xC(t), t) = k2*xB(t);\n"
       "diff(eA(t), t) = 0;\n"
       "diff(eC(t), t) = 0;\n"
       "y1(t) = eA(t)*xA(t) + eB*xB(t) + eC(t)*xC(t);\n"
       "y2(t) = xC(t);\n"
       "y3(t) = eA(t);\n"
       "y4(t) = eC(t)\n",
       "Reaction A -> B -> C after Vajda and Rabitz (1988), Chem. Eng. Sci. 43"},
      {"crn", "Mixed-mechanism chemical reaction network",
       "diff(x1(t), t) = -k1*x1(t)*x2(t) + k2*x4(t) + k4*x6(t);\n"
       "diff(x2(t), t) = k1*x1(t)*x2(t) + k2*x4(t) + k3*x4(t);\n"
       "diff(x3(t), t) = k3*x4(t) + k5*x6(t) - k6*x3(t)*x5(t);\n"
       "diff(x4(t), t) = k1*x1(t)*x2(t) - k2*x4(t) - k3*x4(t);\n"
       "diff(x5(t), t) = k4*x6(t) + k5*x6(t) - k6*x3(t)*x5(t);\n"
       "diff(x6(t), t) = -k4*x6(t) - k5*x6(t) + k6*x3(t)*x5(t);\n"
       "y1(t) = x3(t);\n"
       "y2(t) = x2(t)\n",
       "Conradi, Feliu, Mincheva, Wiuf (2017), PLoS Comput. Biol. 13, multistationarity regions"},
  };
  return catalog;
}

const Example* find_example(const std::string& name) {
  for (const auto& e : examples())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace sia::model
