#include "rookcong/counterexample.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "rookcong/membership.hpp"

namespace rookcong {

  ConjugationWitness conjugation_counterexample(int n) {
    if (n < 6 || n % 2 != 0 || n > kMaxDegree) {
      throw std::domain_error("the conjugation witness needs an even n with 6 "
                              "<= n <= "
                              + std::to_string(kMaxDegree) + ", got "
                              + std::to_string(n));
    }
    std::vector<int> sigma(n), s(n);
    for (int i = 1; i <= n; ++i) {
      sigma[i - 1] = i;
      s[i - 1]     = i;
    }
    sigma[0]     = 3;
    sigma[1]     = 1;
    sigma[2]     = 2;
    sigma[n - 3] = n - 1;
    sigma[n - 2] = n;
    sigma[n - 1] = n - 2;

    s[0]     = 2;
    s[1]     = n;
    s[2]     = n - 1;
    s[n - 3] = 3;
    s[n - 2] = n - 2;
    s[n - 1] = 1;

    auto const x = PartialInjection::from_images(n, sigma);
    auto const g = PartialInjection::from_images(n, s);
    auto const c = compose(invert(g), compose(x, g));

    ConjugationWitness out{x,
                           g,
                           c,
                           is_member(Family::OR, x),
                           in_unit_group(Family::SR, g),
                           is_member(Family::SR, c),
                           std::nullopt};
    for (int i = 1; i <= n; ++i) {
      if (c[theta(n, i)] != theta(n, c[i])) {
        out.violated_at = i;
        break;
      }
    }
    return out;
  }

}  // namespace rookcong
