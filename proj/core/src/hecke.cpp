#include "bposet/hecke.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "bposet/errors.hpp"
#include "bposet/extensions.hpp"

namespace bposet {

HeckeModule::HeckeModule(HeckeType type, int rank, std::vector<int> generators, std::vector<SparseMatrix> actions,
                         std::vector<std::vector<int>> labels, std::string name, int dim)
    : type_(type), rank_(rank), gens_(std::move(generators)), actions_(std::move(actions)),
      labels_(std::move(labels)), name_(std::move(name)) {
  if (gens_.size() != actions_.size()) throw InvalidInput("one action matrix per generator is required");
  if (!std::is_sorted(gens_.begin(), gens_.end())) throw InvalidInput("generators must be sorted");
  const int lo = type == HeckeType::B ? 0 : 1;
  for (int g : gens_)
    if (g < lo || g > rank - 1) throw InvalidInput("generator index " + std::to_string(g) + " out of range");
  if (!actions_.empty())
    dim_ = actions_.front().dim();
  else
    dim_ = labels_.empty() ? std::max(dim, 0) : static_cast<int>(labels_.size());
  for (const auto& a : actions_)
    if (a.dim() != dim_) throw InvalidInput("action matrices differ in size");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != dim_) throw InvalidInput("label count differs from dimension");
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) label_index_.emplace(labels_[i], i);
}

bool HeckeModule::has_generator(int i) const { return std::binary_search(gens_.begin(), gens_.end(), i); }

const SparseMatrix& HeckeModule::action(int i) const {
  auto it = std::lower_bound(gens_.begin(), gens_.end(), i);
  if (it == gens_.end() || *it != i) throw InvalidInput("module has no generator " + std::to_string(i));
  return actions_[it - gens_.begin()];
}

int HeckeModule::index_of_label(const std::vector<int>& window) const {
  auto it = label_index_.find(window);
  return it == label_index_.end() ? -1 : it->second;
}

std::vector<int> all_generators(HeckeType t, int rank) {
  std::vector<int> g;
  for (int i = (t == HeckeType::B ? 0 : 1); i < rank; ++i) g.push_back(i);
  return g;
}

int coxeter_m(HeckeType t, int i, int j) {
  if (i == j) return 1;
  if (i > j) std::swap(i, j);
  if (t == HeckeType::B && i == 0 && j == 1) return 4;
  return j - i == 1 ? 3 : 2;
}

std::vector<std::string> relation_failures(const HeckeModule& M) {
  std::vector<std::string> bad;
  const auto& g = M.generators();
  for (std::size_t a = 0; a < g.size(); ++a) {
    const SparseMatrix& A = M.actions()[a];
    if (A * A != -A) bad.push_back("pibar_" + std::to_string(g[a]) + "^2 != -pibar_" + std::to_string(g[a]));
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      const SparseMatrix& B = M.actions()[b];
      const int m = coxeter_m(M.type(), g[a], g[b]);
      SparseMatrix lhs = SparseMatrix::identity(M.dim()), rhs = lhs;
      for (int k = 0; k < m; ++k) {
        lhs = lhs * (k % 2 == 0 ? A : B);
        rhs = rhs * (k % 2 == 0 ? B : A);
      }
      if (lhs != rhs)
        bad.push_back("braid(" + std::to_string(g[a]) + "," + std::to_string(g[b]) + ") of length " + std::to_string(m));
    }
  }
  return bad;
}

void verify_relations(const HeckeModule& M) {
  auto bad = relation_failures(M);
  if (!bad.empty()) throw InternalError("relation failure in " + M.name() + ": " + bad.front());
}

namespace {

template <class Perm>
HeckeModule ascent_module(HeckeType t, int n, const std::vector<Perm>& X, ActionFlavor f, std::string name) {
  if (f == ActionFlavor::Derived) throw InvalidInput("ascent modules use the Bar or Pi action");
  std::map<Perm, int> idx;
  std::vector<std::vector<int>> labels;
  for (const auto& x : X) {
    if (x.rank() != n) throw RankMismatch("ascent module: mixed ranks");
    if (!idx.emplace(x, static_cast<int>(labels.size())).second) throw InvalidInput("repeated basis element " + x.str());
    labels.push_back(x.window());
  }
  const auto gens = all_generators(t, n);
  std::vector<SparseMatrix> acts;
  for (int i : gens) {
    SparseMatrix A(static_cast<int>(X.size()));
    for (std::size_t k = 0; k < X.size(); ++k) {
      const int r = static_cast<int>(k);
      if (X[k].has_descent(i)) {
        if (f == ActionFlavor::Bar) A.add(r, r, -1);
        continue;
      }
      auto it = idx.find(X[k].times_simple(i));
      if (it != idx.end()) A.add(r, it->second, 1);
      if (f == ActionFlavor::Pi) A.add(r, r, -1);
    }
    acts.push_back(std::move(A));
  }
  HeckeModule M(t, n, gens, std::move(acts), std::move(labels), std::move(name));
  M.set_flavor(f);
  return M;
}

}  // namespace

HeckeModule ascent_module_B(const std::vector<SignedPermutation>& X, ActionFlavor f, std::string name) {
  if (X.empty()) throw InvalidInput("ascent module on an empty set");
  return ascent_module(HeckeType::B, X.front().rank(), X, f, std::move(name));
}

HeckeModule ascent_module_A(const std::vector<Permutation>& X, ActionFlavor f, std::string name) {
  if (X.empty()) throw InvalidInput("ascent module on an empty set");
  return ascent_module(HeckeType::A, X.front().rank(), X, f, std::move(name));
}

HeckeModule module_MBP(const BnPoset& P) {
  HeckeModule M = ascent_module_B(linear_extensions_B(P), ActionFlavor::Bar, "M^B_P");
  M.set_poset(P);
  verify_relations(M);
  return M;
}

HeckeModule module_sfMBP(const BnPoset& P) {
  HeckeModule M = ascent_module_B(linear_extensions_B(P), ActionFlavor::Pi, "sfM^B_P");
  M.set_poset(P);
  verify_relations(M);
  return M;
}

HeckeModule module_MP_typeA(const FinitePoset& P) {
  HeckeModule M = ascent_module_A(linear_extensions_A(P), ActionFlavor::Bar, "M_P");
  M.set_poset(P);
  verify_relations(M);
  return M;
}

HeckeModule module_sfMP_typeA(const FinitePoset& P) {
  HeckeModule M = ascent_module_A(linear_extensions_A(P), ActionFlavor::Pi, "sfM_P");
  M.set_poset(P);
  verify_relations(M);
  return M;
}

HeckeModule simple_module_B(const CompositionB& a) {
  const int n = a.size();
  const auto s = set_B(a);
  std::vector<SparseMatrix> acts;
  for (int i = 0; i < n; ++i) {
    SparseMatrix A(1);
    if (std::binary_search(s.begin(), s.end(), i)) A.add(0, 0, -1);
    acts.push_back(std::move(A));
  }
  HeckeModule M(HeckeType::B, n, all_generators(HeckeType::B, n), std::move(acts), {signed_with_descents(n, s).window()},
                "F^B" + a.str());
  M.set_flavor(ActionFlavor::Bar);
  return M;
}

HeckeModule simple_module_A(const CompositionA& a) {
  const int n = a.size();
  const auto s = set_of(a);
  std::vector<SparseMatrix> acts;
  for (int i = 1; i < n; ++i) {
    SparseMatrix A(1);
    if (std::binary_search(s.begin(), s.end(), i)) A.add(0, 0, -1);
    acts.push_back(std::move(A));
  }
  HeckeModule M(HeckeType::A, n, all_generators(HeckeType::A, n), std::move(acts), {permutation_with_descents(n, s).window()},
                "F" + a.str());
  M.set_flavor(ActionFlavor::Bar);
  return M;
}

QSymBElement characteristic_B(const HeckeModule& M) {
  if (M.type() != HeckeType::B || M.flavor() != ActionFlavor::Bar || !M.labeled())
    throw InvalidInput("characteristic needs a type-B module built from an ascent-compatible set");
  QSymBElement ch(Basis::Fundamental);
  for (const auto& w : M.labels()) ch += FB_of_set(M.rank(), SignedPermutation(w).descents());
  return ch;
}

QSymElement characteristic_A(const HeckeModule& M) {
  if (M.type() != HeckeType::A || M.flavor() != ActionFlavor::Bar || !M.labeled())
    throw InvalidInput("characteristic needs a type-A module built from an ascent-compatible set");
  QSymElement ch(Basis::Fundamental);
  for (const auto& w : M.labels()) ch += F_of_set(M.rank(), Permutation(w).descents());
  return ch;
}

namespace {

std::vector<Relation> ordered_pairs(const BnPoset& P) {
  std::vector<Relation> out;
  for (auto [u, v] : incB(P))
    if (u < v) out.emplace_back(u, v);
  return out;
}

CompositionB leaf_composition(const BnPoset& P) {
  auto ext = linear_extensions_B(P);
  if (ext.size() != 1) throw InternalError("no incomparable pair left but several extensions remain");
  return comp_B(P.rank(), ext.front().descents());
}

}  // namespace

std::vector<CompositionB> grothendieck_decompose(const BnPoset& P, PairChoice choice, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<CompositionB> out;
  std::function<void(const BnPoset&)> rec = [&](const BnPoset& Q) {
    auto pairs = ordered_pairs(Q);
    if (pairs.empty()) {
      out.push_back(leaf_composition(Q));
      return;
    }
    Relation p = pairs.front();
    if (choice == PairChoice::Last) p = pairs.back();
    if (choice == PairChoice::Random) p = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
    rec(extend_pair(Q, p.second, p.first));
    rec(extend_pair(Q, p.first, p.second));
  };
  rec(P);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<CompositionB>> grothendieck_decompose_all_orders(const BnPoset& P) {
  std::map<FinitePoset, std::optional<std::vector<CompositionB>>> memo;
  std::function<std::optional<std::vector<CompositionB>>(const BnPoset&)> rec =
      [&](const BnPoset& Q) -> std::optional<std::vector<CompositionB>> {
    if (auto it = memo.find(Q.poset()); it != memo.end()) return it->second;
    std::optional<std::vector<CompositionB>> result;
    auto pairs = ordered_pairs(Q);
    if (pairs.empty()) {
      result = std::vector<CompositionB>{leaf_composition(Q)};
    } else {
      bool first = true;
      for (auto [u, v] : pairs) {
        auto a = rec(extend_pair(Q, v, u));
        auto b = rec(extend_pair(Q, u, v));
        if (!a || !b) {
          result.reset();
          break;
        }
        std::vector<CompositionB> joined = *a;
        joined.insert(joined.end(), b->begin(), b->end());
        std::sort(joined.begin(), joined.end());
        if (first) {
          result = joined;
          first = false;
        } else if (joined != *result) {
          result.reset();
          break;
        }
      }
    }
    memo.emplace(Q.poset(), result);
    return result;
  };
  return rec(P);
}

bool is_submodule(const HeckeModule& M, const std::vector<int>& basis_indices) {
  std::vector<bool> in(M.dim(), false);
  for (int i : basis_indices) in.at(i) = true;
  for (const auto& A : M.actions())
    for (int i : basis_indices)
      for (auto [j, v] : A.row(i))
        if (!in[j]) return false;
  return true;
}

std::vector<std::int64_t> apply_word(const HeckeModule& M, std::vector<std::int64_t> v, const std::vector<int>& word) {
  if (static_cast<int>(v.size()) != M.dim()) throw InvalidInput("vector length differs from module dimension");
  for (int g : word) {
    const SparseMatrix& A = M.action(g);
    std::vector<std::int64_t> w(v.size(), 0);
    for (int i = 0; i < M.dim(); ++i)
      if (v[i] != 0)
        for (auto [j, c] : A.row(i)) w[j] += v[i] * c;
    v = std::move(w);
  }
  return v;
}

}  // namespace bposet
