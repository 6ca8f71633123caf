#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bposet/composition.hpp"
#include "bposet/linalg.hpp"
#include "bposet/permutation.hpp"
#include "bposet/poset.hpp"
#include "bposet/qsym.hpp"

namespace bposet {

enum class HeckeType { A, B };

// How the basis was produced; Bar/Pi are the two three-case actions on a set of labels.
enum class ActionFlavor { Bar, Pi, Derived };

// Right module over H_n(0) or H^B_n(0), stored as the matrices of the generators pibar_i.
class HeckeModule {
 public:
  HeckeModule() = default;
  HeckeModule(HeckeType type, int rank, std::vector<int> generators, std::vector<SparseMatrix> actions,
              std::vector<std::vector<int>> labels = {}, std::string name = {}, int dim = -1);

  HeckeType type() const { return type_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  const std::vector<int>& generators() const { return gens_; }
  bool has_generator(int i) const;
  const SparseMatrix& action(int i) const;
  const std::vector<SparseMatrix>& actions() const { return actions_; }

  bool labeled() const { return !labels_.empty(); }
  const std::vector<std::vector<int>>& labels() const { return labels_; }
  int index_of_label(const std::vector<int>& window) const;  // -1 if absent
  const std::string& name() const { return name_; }

  ActionFlavor flavor() const { return flavor_; }
  const std::optional<BnPoset>& b_poset() const { return b_poset_; }
  const std::optional<FinitePoset>& a_poset() const { return a_poset_; }

  HeckeModule& set_flavor(ActionFlavor f) {
    flavor_ = f;
    return *this;
  }
  HeckeModule& set_poset(BnPoset P) {
    b_poset_ = std::move(P);
    return *this;
  }
  HeckeModule& set_poset(FinitePoset P) {
    a_poset_ = std::move(P);
    return *this;
  }
  HeckeModule& set_name(std::string s) {
    name_ = std::move(s);
    return *this;
  }

 private:
  HeckeType type_ = HeckeType::B;
  int rank_ = 0;
  int dim_ = 0;
  std::vector<int> gens_;
  std::vector<SparseMatrix> actions_;
  std::vector<std::vector<int>> labels_;
  std::map<std::vector<int>, int> label_index_;
  std::string name_;
  ActionFlavor flavor_ = ActionFlavor::Derived;
  std::optional<BnPoset> b_poset_;
  std::optional<FinitePoset> a_poset_;
};

std::vector<int> all_generators(HeckeType t, int rank);
int coxeter_m(HeckeType t, int i, int j);

// Empty when every defining relation holds exactly.
std::vector<std::string> relation_failures(const HeckeModule& M);
void verify_relations(const HeckeModule& M);

HeckeModule ascent_module_B(const std::vector<SignedPermutation>& X, ActionFlavor f, std::string name = {});
HeckeModule ascent_module_A(const std::vector<Permutation>& X, ActionFlavor f, std::string name = {});

HeckeModule module_MBP(const BnPoset& P);
HeckeModule module_sfMBP(const BnPoset& P);
HeckeModule module_MP_typeA(const FinitePoset& P);
HeckeModule module_sfMP_typeA(const FinitePoset& P);

HeckeModule simple_module_B(const CompositionB& a);
HeckeModule simple_module_A(const CompositionA& a);

QSymBElement characteristic_B(const HeckeModule& M);
QSymElement characteristic_A(const HeckeModule& M);

enum class PairChoice { First, Last, Random };
std::vector<CompositionB> grothendieck_decompose(const BnPoset& P, PairChoice choice = PairChoice::First,
                                                 unsigned seed = 0);
// Every pair choice at every step, memoized on the poset; nullopt if two choices disagree.
std::optional<std::vector<CompositionB>> grothendieck_decompose_all_orders(const BnPoset& P);

bool is_submodule(const HeckeModule& M, const std::vector<int>& basis_indices);

// v -> v * pibar_{w_1} * ... * pibar_{w_k}
std::vector<std::int64_t> apply_word(const HeckeModule& M, std::vector<std::int64_t> v, const std::vector<int>& word);

}  // namespace bposet
