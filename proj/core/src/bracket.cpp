#include "homnambu/bracket.hpp"

#include <numeric>

#include "homnambu/errors.hpp"
#include "homnambu/orbit.hpp"
#include "homnambu/tuples.hpp"

namespace homnambu {

OrbitConflict::OrbitConflict(std::string tuple, std::string expected, std::string found)
    : InputError("orbit conflict at " + tuple + ": symmetry requires " + expected + ", found " + found),
      tuple_(std::move(tuple)),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

NaryBracket::NaryBracket(SuperSpace space, std::size_t arity)
    : space_(std::move(space)), arity_(arity) {
  if (arity_ < 2) throw InputError("bracket arity must be at least 2");
  const std::size_t count = tuple_count(space_.dim(), arity_);
  table_.assign(count, Element(space_.dim()));
  nonzero_.assign(count, false);
}

namespace {

NaryBracket build(SuperSpace space, std::size_t arity,
                  const std::vector<std::pair<Tuple, Element>>& generators,
                  const std::vector<std::size_t>& positions) {
  NaryBracket b(space, arity);
  for (const auto& [t, v] : generators) {
    if (t.size() != arity) throw InputError("generator tuple has wrong length");
    for (auto i : t) {
      if (i >= space.dim()) throw InputError("generator tuple index out of range");
    }
    if (v.dim() != space.dim()) throw InputError("generator value has wrong dimension");
  }
  const auto filled = complete_orbits(space, generators, positions,
                                      [&](const Element& e) { return e.format(space); });
  for (const auto& [t, v] : filled) {
    if (!v.is_zero()) b.set(t, v);
  }
  return b;
}

}  // namespace

NaryBracket NaryBracket::from_generators(SuperSpace space, std::size_t arity,
                                         const std::vector<std::pair<Tuple, Element>>& generators) {
  std::vector<std::size_t> positions(arity - 1);
  std::iota(positions.begin(), positions.end(), std::size_t{1});
  return build(std::move(space), arity, generators, positions);
}

NaryBracket NaryBracket::from_generators_first_pair(
    SuperSpace space, std::size_t arity, const std::vector<std::pair<Tuple, Element>>& generators) {
  return build(std::move(space), arity, generators, {1});
}

std::size_t NaryBracket::flat_index_checked(std::span<const std::size_t> tuple) const {
  if (tuple.size() != arity_) throw InputError("bracket called with wrong number of arguments");
  for (auto i : tuple) {
    if (i >= dim()) throw InputError("basis index out of range");
  }
  return flat_index(tuple, dim());
}

void NaryBracket::set(std::span<const std::size_t> tuple, Element value) {
  if (value.dim() != dim()) throw InputError("bracket value has wrong dimension");
  const auto f = flat_index_checked(tuple);
  nonzero_[f] = !value.is_zero();
  table_[f] = std::move(value);
}

std::vector<std::size_t> NaryBracket::support() const {
  std::vector<std::size_t> s;
  for (std::size_t f = 0; f < nonzero_.size(); ++f) {
    if (nonzero_[f]) s.push_back(f);
  }
  return s;
}

bool NaryBracket::is_zero() const {
  for (bool b : nonzero_) {
    if (b) return false;
  }
  return true;
}

Element NaryBracket::evaluate(std::span<const Element> args) const {
  if (args.size() != arity_) throw InputError("bracket called with wrong number of arguments");
  std::vector<SparseVec> sv;
  sv.reserve(args.size());
  for (const auto& a : args) {
    if (a.dim() != dim()) throw InputError("argument has wrong dimension");
    sv.push_back(sparse(a));
  }
  std::vector<const SparseVec*> ptrs;
  for (const auto& s : sv) ptrs.push_back(&s);
  Element out(dim());
  accumulate(ptrs, Scalar(1), out);
  return out;
}

void NaryBracket::accumulate(std::span<const SparseVec* const> args, const Scalar& coeff,
                             Element& out) const {
  const std::size_t n = arity_;
  if (args.size() != n) throw InputError("bracket called with wrong number of arguments");
  for (const auto* a : args) {
    if (a->empty()) return;
  }
  std::vector<std::size_t> pos(n, 0);
  Scalar c;
  while (true) {
    std::size_t f = 0;
    for (std::size_t k = 0; k < n; ++k) f = f * dim() + (*args[k])[pos[k]].index;
    if (nonzero_[f]) {
      c = coeff;
      for (std::size_t k = 0; k < n; ++k) c *= (*args[k])[pos[k]].coeff;
      out.add_scaled(table_[f], c);
    }
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++pos[k] < args[k]->size()) break;
      pos[k] = 0;
      if (k == 0) return;
    }
  }
}

bool operator==(const NaryBracket& a, const NaryBracket& b) {
  return a.space_ == b.space_ && a.arity_ == b.arity_ && a.table_ == b.table_;
}

NaryBracket complete_skew_orbit(const NaryBracket& partial) {
  std::vector<std::pair<Tuple, Element>> gens;
  for (auto f : partial.support())
    gens.emplace_back(tuple_at(f, partial.dim(), partial.arity()), partial.at_flat(f));
  return NaryBracket::from_generators(partial.space(), partial.arity(), gens);
}

}  // namespace homnambu
