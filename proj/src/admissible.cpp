#include "rookcong/admissible.hpp"

#include <stdexcept>
#include <string>

namespace rookcong {

  bool is_admissible(int n, PointSet s) {
    PointSet const all = full_set(n);
    if ((s & ~all) != 0) {
      throw std::domain_error("is_admissible: set not contained in {1..n}");
    }
    return s == 0 || s == all || (s & theta(n, s)) == 0;
  }

  AdmissibleSet::AdmissibleSet(int n, PointSet s) : _degree(n), _mask(s) {
    if (!is_admissible(n, s)) {
      throw std::domain_error("set is not admissible");
    }
  }

  std::vector<AdmissibleSet> admissible_subsets(int n, int k) {
    std::vector<AdmissibleSet> out;
    if (k < 0 || k > n) {
      return out;
    }
    // Lexicographic k-combinations of {1..n}.
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) {
      comb[i] = i + 1;
    }
    while (true) {
      PointSet const s = point_set(comb);
      if (is_admissible(n, s)) {
        out.emplace_back(n, s);
      }
      int i = k - 1;
      while (i >= 0 && comb[i] == n - k + i + 1) {
        --i;
      }
      if (i < 0) {
        break;
      }
      ++comb[i];
      for (int j = i + 1; j < k; ++j) {
        comb[j] = comb[j - 1] + 1;
      }
    }
    return out;
  }

  std::string_view to_string(MSetType t) {
    return t == MSetType::I ? "I" : "II";
  }

  MSetType type_of(int n, PointSet s) {
    int const m = n / 2;
    if (n % 2 != 0 || popcount(s) != m) {
      throw std::domain_error("type_of: expected an admissible "
                              + std::to_string(m) + "-subset of {1.."
                              + std::to_string(n) + "}");
    }
    if (!is_admissible(n, s)) {
      throw std::domain_error("type_of: set is not admissible");
    }
    int const upper = popcount(s & ~full_set(m));
    return upper % 2 == 0 ? MSetType::I : MSetType::II;
  }

  PartialInjection idempotent_of(AdmissibleSet const& a) {
    return PartialInjection::identity_on(a.degree(), a.mask());
  }

  PartialInjection idempotent_of(int n, PointSet s) {
    return idempotent_of(AdmissibleSet(n, s));
  }

}  // namespace rookcong
