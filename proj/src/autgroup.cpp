#include "leibniz/autgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace leibniz {

AutSet::AutSet(FieldSpec f, std::size_t dim, std::vector<LinearMap> maps)
    : field_(f), dim_(dim), elements_(std::move(maps)) {
  for (const auto& m : elements_) {
    if (m.dim() != dim_ || !(m.field() == field_)) {
      throw Error(ErrorKind::DimensionMismatch, "map does not match the set's space");
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool AutSet::contains(const LinearMap& f) const {
  return std::binary_search(elements_.begin(), elements_.end(), f);
}

bool AutSet::is_subset_of(const AutSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

AutSet AutSet::without(const LinearMap& f) const {
  std::vector<LinearMap> rest;
  std::copy_if(elements_.begin(), elements_.end(), std::back_inserter(rest),
               [&](const LinearMap& g) { return !(g == f); });
  return AutSet(field_, dim_, std::move(rest));
}

std::vector<LinearMap> set_difference(const AutSet& a, const AutSet& b) {
  std::vector<LinearMap> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::uint64_t default_guard() {
  constexpr std::uint64_t fallback = 100'000'000;
  const char* env = std::getenv("LEIBNIZ_KIT_GUARD");
  if (env == nullptr) return fallback;
  char* end = nullptr;
  const auto v = std::strtoull(env, &end, 10);
  return (end != env && *end == '\0' && v > 0) ? v : fallback;
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (acc > UINT64_MAX / base) return UINT64_MAX;
    acc *= base;
  }
  return acc;
}

// Returns sigma^-1 if v = sigma * e_k for some sigma != 0, else nullopt.
std::optional<Scalar> single_coordinate(const Vector& v, std::size_t k) {
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t != k && !v[t].is_zero()) return std::nullopt;
  }
  if (v[k].is_zero()) return std::nullopt;
  return inverse(v[k]);
}

}  // namespace

SearchPlan plan_search(const Algebra& a, bool prune) {
  const auto n = a.dim();
  SearchPlan plan;
  std::vector<bool> forced(n, false);
  if (prune) {
    // b_k may be forced only by a bracket of two vectors that stay free, so
    // every forced image is computable from free images directly.
    std::vector<bool> generator(n, false);
    for (std::size_t k = 0; k < n; ++k) {
      if (generator[k]) continue;
      for (std::size_t i = 0; i < n && !forced[k]; ++i) {
        for (std::size_t j = 0; j < n && !forced[k]; ++j) {
          if (i == k || j == k || forced[i] || forced[j]) continue;
          if (auto inv = single_coordinate(a.basis_bracket(i, j), k)) {
            forced[k] = true;
            generator[i] = generator[j] = true;
            plan.forced.push_back({k, i, j, *inv});
          }
        }
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!forced[k]) plan.free_columns.push_back(k);
  }
  const std::uint64_t q = a.field().is_finite() ? a.field().characteristic() : 0;
  plan.candidates = q == 0 ? UINT64_MAX : saturating_pow(q, n * plan.free_columns.size());
  return plan;
}

AutSet enumerate_automorphisms(const Algebra& a, const EnumerationOptions& options) {
  const auto& f = a.field();
  if (!f.is_finite()) {
    throw Error(ErrorKind::InfiniteField, "automorphism enumeration needs a finite field");
  }
  const auto n = a.dim();
  const auto plan = plan_search(a, options.prune);
  if (plan.candidates > options.guard) {
    throw Error(ErrorKind::GuardExceeded, std::to_string(plan.candidates) +
                                              " candidates exceed the guard of " +
                                              std::to_string(options.guard));
  }
  const auto scalars = enumerate_scalars(f);
  const std::uint64_t q = scalars.size();
  const std::size_t free_entries = n * plan.free_columns.size();
  // The leading n digits select the image of the first free column; workers
  // split that range round-robin.
  const std::uint64_t head_count = plan.free_columns.empty() ? 1 : saturating_pow(q, n);
  const std::uint64_t tail_count = plan.candidates / head_count;

  const auto search = [&](unsigned worker, unsigned workers, std::vector<LinearMap>& found) {
    std::vector<std::size_t> digits(free_entries, 0);
    for (std::uint64_t head = worker; head < head_count; head += workers) {
      for (std::uint64_t tail = 0; tail < tail_count; ++tail) {
        // Mixed-radix decode: digit 0 is the most significant.
        std::uint64_t code = head * tail_count + tail;
        for (std::size_t d = free_entries; d-- > 0;) {
          digits[d] = code % q;
          code /= q;
        }
        std::vector<Vector> cols(n);
        for (std::size_t c = 0; c < plan.free_columns.size(); ++c) {
          auto& col = cols[plan.free_columns[c]];
          col.reserve(n);
          for (std::size_t r = 0; r < n; ++r) col.push_back(scalars[digits[c * n + r]]);
        }
        for (const auto& fc : plan.forced) {
          cols[fc.k] = scale(fc.inverse_sigma, a.bracket(cols[fc.i], cols[fc.j]));
        }
        LinearMap candidate(Matrix::from_columns(f, cols));
        if (det(candidate.matrix()).is_zero()) continue;
        if (is_endomorphism(a, candidate)) found.push_back(std::move(candidate));
      }
    }
  };

  const unsigned workers = std::max(1U, options.jobs);
  std::vector<std::vector<LinearMap>> partial(workers);
  if (workers == 1) {
    search(0, 1, partial[0]);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] { search(w, workers, partial[w]); });
    }
  }
  std::vector<LinearMap> merged;
  for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(merged));
  return AutSet(f, n, std::move(merged));
}

GroupCheck verify_group(const AutSet& s) {
  if (!s.contains(LinearMap::identity(s.field(), s.dim()))) return {false, "identity"};
  for (const auto& f : s) {
    for (const auto& g : s) {
      if (!s.contains(f * g)) return {false, "closure"};
    }
  }
  for (const auto& f : s) {
    if (!s.contains(f.inverse())) return {false, "inverse"};
  }
  return {true, std::nullopt};
}

AutSet centralizer_of_quotient(const AutSet& s, const Subspace& z) {
  std::vector<LinearMap> out;
  for (const auto& f : s) {
    const auto induced = induced_quotient_map(f, z);
    if (induced == LinearMap::identity(s.field(), induced.dim())) out.push_back(f);
  }
  return AutSet(s.field(), s.dim(), std::move(out));
}

AutSet centralizer_of(const AutSet& s, const Subspace& b) {
  std::vector<LinearMap> out;
  for (const auto& f : s) {
    const bool fixes = std::all_of(b.basis().begin(), b.basis().end(),
                                   [&](const Vector& v) { return f(v) == v; });
    if (fixes) out.push_back(f);
  }
  return AutSet(s.field(), s.dim(), std::move(out));
}

bool is_normal_subset(const AutSet& s, const AutSet& n) {
  if (!n.is_subset_of(s)) throw Error(ErrorKind::NotSubset, "N is not a subset of S");
  for (const auto& g : s) {
    const auto g_inv = g.inverse();
    for (const auto& x : n) {
      if (!n.contains(g * x * g_inv)) return false;
    }
  }
  return true;
}

}  // namespace leibniz
