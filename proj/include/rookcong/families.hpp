#ifndef ROOKCONG_FAMILIES_HPP
#define ROOKCONG_FAMILIES_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "congruence.hpp"
#include "green.hpp"
#include "ideals.hpp"
#include "permutation.hpp"
#include "universe.hpp"

namespace rookcong {

  enum class FamilyTag {
    or_eq_n,      // ≡_N on OR_n, N ⊴ S_k, 1 <= k <= m-1
    or_eq_n1_n2,  // ≡_{N1,N2} on OR_n, N1, N2 ⊴ S_m
    or_eq_type_one,  // ≡_N^I on OR_n, N ⊴ S_m
    or_eq_type_two,  // ≡_N^II on OR_n, N ⊴ S_m
    or_eq_special_one,  // ≡_1 on OR_4
    or_eq_special_two,  // ≡_2 on OR_4
    sr_eq_n,     // ≡_N on SR_n, N ⊴ S_k (1 <= k <= m) or N ⊴ W (k = n)
    universal    // the uniform congruence, outside the classified families
  };

  std::string_view to_string(FamilyTag tag);

  // Subgroups are stored as sorted element lists.
  struct FamilySpec {
    FamilyTag                tag;
    std::optional<int>       k;
    std::vector<Permutation> n;
    std::vector<Permutation> n1;
    std::vector<Permutation> n2;

    std::string describe() const;

    friend bool operator==(FamilySpec const&, FamilySpec const&) = default;
  };

  // Each builder validates its parameters (std::domain_error on a wrong
  // family or degree, a bad level, or a subgroup that is not normal in the
  // required parent) and returns a canonical partition of the universe.
  Partition build_eq_n_or(Universe const& u, int k,
                          std::span<Permutation const> n);
  Partition build_eq_n1_n2(Universe const& u, std::span<Permutation const> n1,
                           std::span<Permutation const> n2);
  // variant I: the zero class is everything of rank < m plus the rank-m
  // type-II elements, and N acts on the type-I H-classes. Variant II swaps
  // the types.
  Partition build_eq_type(Universe const& u, MSetType variant,
                          std::span<Permutation const> n);
  // which is 1 or 2; u must be OR_4.
  Partition build_eq_special(Universe const& u, int which);
  Partition build_eq_n_sr(Universe const& u, int k,
                          std::span<Permutation const> n);

  Partition build(Universe const& u, FamilySpec const& spec);

  struct PredictedCongruence {
    Partition               partition;
    std::vector<FamilySpec> specs;  // every parameterization giving it
  };

  struct Prediction {
    std::vector<PredictedCongruence> congruences;  // canonical order
    std::size_t                      spec_count = 0;  // before dedup
  };

  // Every family member over every admissible parameter, plus the universal
  // relation, deduplicated by partition. Throws invariant_error if a member
  // fails the congruence check.
  Prediction predicted_congruences(Universe const& u);

  struct MatchedCongruence {
    std::size_t             lattice_index;
    std::vector<FamilySpec> specs;
  };

  struct UnmatchedCongruence {
    std::size_t                              lattice_index;
    Partition                                partition;
    IdealDescriptor                          zero_class;
    std::vector<std::vector<std::uint32_t>>  unit_classes;
    std::vector<std::string>                 tags;
  };

  struct ClassificationReport {
    Family                           family;
    int                              degree;
    std::size_t                      universe_size = 0;
    std::size_t                      lattice_size  = 0;
    std::size_t                      spec_count    = 0;
    std::vector<MatchedCongruence>   matched;
    std::vector<FamilySpec>          predicted_not_found;
    std::vector<UnmatchedCongruence> found_not_predicted;
    std::vector<std::string>         notes;
  };

  // Pure diff of a prediction against a computed lattice.
  ClassificationReport classify(Universe const&               u,
                                GreenData const&              green,
                                Prediction const&             prediction,
                                std::vector<Partition> const& lattice);

  // Enumerates the lattice and diffs it against the prediction. Throws
  // resource_error if the lattice budget is exceeded.
  ClassificationReport verify_classification(Universe const&       u,
                                             LatticeOptions const& options = {});

}  // namespace rookcong

#endif  // ROOKCONG_FAMILIES_HPP
