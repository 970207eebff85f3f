#include "mahler/minsearch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

#include "mahler/irreducibility.hpp"
#include "mahler/measure.hpp"

namespace mahler {

CandidateBox::CandidateBox(unsigned degree, long bound) : d_(degree), b_(bound) {
  if (degree < 1) throw DomainError("search degree must be >= 1");
  if (bound < 0) throw DomainError("box bound must be >= 0");
  const long double count = static_cast<long double>(bound) * std::pow(static_cast<long double>(2 * bound + 1), degree);
  if (count > 4e18L) throw DomainError("candidate box too large");
  size_ = static_cast<std::uint64_t>(bound);
  for (unsigned k = 0; k < degree; ++k) size_ *= static_cast<std::uint64_t>(2 * bound + 1);
}

BinomialPoly CandidateBox::at(std::uint64_t index) const {
  if (index >= size_) throw DomainError("candidate index out of range");
  const auto radix = static_cast<std::uint64_t>(2 * b_ + 1);
  std::vector<mpz_class> c(d_ + 1);
  // c_d is the fastest digit, c_0 the slowest
  c[d_] = static_cast<long>(index % static_cast<std::uint64_t>(b_)) + 1;
  index /= static_cast<std::uint64_t>(b_);
  for (unsigned k = d_; k-- > 0;) {
    c[k] = static_cast<long>(index % radix) - b_;
    index /= radix;
  }
  return BinomialPoly{std::move(c)};
}

std::optional<std::uint64_t> CandidateBox::index_of(const BinomialPoly& p) const {
  if (p.coords.size() != d_ + 1) return std::nullopt;
  const mpz_class B(b_);
  for (unsigned k = 0; k < d_; ++k)
    if (abs(p.coords[k]) > B) return std::nullopt;
  if (p.coords[d_] < 1 || p.coords[d_] > B) return std::nullopt;
  const auto radix = static_cast<std::uint64_t>(2 * b_ + 1);
  std::uint64_t idx = 0;
  for (unsigned k = 0; k < d_; ++k) idx = idx * radix + static_cast<std::uint64_t>(p.coords[k].get_si() + b_);
  return idx * static_cast<std::uint64_t>(b_) + static_cast<std::uint64_t>(p.coords[d_].get_si() - 1);
}

std::vector<BinomialPoly> enumerate_candidates(unsigned degree, long bound) {
  CandidateBox box(degree, bound);
  if (box.size() > 50'000'000) throw DomainError("too many candidates to materialize");
  std::vector<BinomialPoly> out;
  out.reserve(box.size());
  for (std::uint64_t i = 0; i < box.size(); ++i) out.push_back(box.at(i));
  return out;
}

BinomialPoly mirror(const BinomialPoly& p) {
  auto b = BinomialPoly::from_rational(reflect(p.to_rational()));
  if (!b) throw DomainError("mirror of a non integer-valued polynomial");
  if (!b->coords.empty() && b->coords.back() < 0)
    for (auto& c : b->coords) c = -c;
  return *b;
}

namespace {

// Overlapping enclosures count as a tie and the earlier index wins.
bool better(const Interval& a, std::uint64_t ia, const Interval& b, std::uint64_t ib) {
  if (a.overlaps(b)) return ia < ib;
  return a.hi() < b.lo();
}

void absorb(SearchRecord& into, const SearchRecord& from) {
  into.symmetry_skipped += from.symmetry_skipped;
  into.reducible_count += from.reducible_count;
  into.irreducible_count += from.irreducible_count;
  into.inconclusive_count += from.inconclusive_count;
  into.measure_one_count += from.measure_one_count;
  into.ambiguous_count += from.ambiguous_count;
  into.below_one_count += from.below_one_count;
  if (!from.found()) return;
  if (!into.found() || better(*from.best_measure, from.best_index, *into.best_measure, into.best_index)) {
    into.best_poly = from.best_poly;
    into.best_measure = from.best_measure;
    into.best_index = from.best_index;
  }
}

void scan(const CandidateBox& box, std::uint64_t begin, std::uint64_t end, double tol, SearchRecord& rec) {
  const BigFloat one(1L, kDefaultPrecision);
  const BigFloat below_one_floor(1.0 - tol, kDefaultPrecision);
  for (std::uint64_t i = begin; i < end; ++i) {
    const BinomialPoly cand = box.at(i);
    const BinomialPoly twin = mirror(cand);
    if (auto j = box.index_of(twin); j && *j < i) {
      ++rec.symmetry_skipped;
      continue;
    }
    const RationalPoly p = cand.to_rational();
    const Certificate cert = irreducible_general(primitive_int(p).primitive);
    if (cert.verdict == Verdict::Reducible) {
      ++rec.reducible_count;
      continue;
    }
    if (cert.verdict == Verdict::Inconclusive) {
      ++rec.inconclusive_count;
      continue;
    }
    ++rec.irreducible_count;

    MeasureResult m = mahler_measure(p, tol);
    if (m.upper() < below_one_floor) ++rec.below_one_count;
    if (!(m.lower() > one)) {
      const std::optional<bool> is_one = measure_is_exactly_one(p);
      if (is_one == std::optional<bool>(true)) {
        ++rec.measure_one_count;
        continue;
      }
      if (is_one) m = mahler_measure(p, tol * 1e-6);
      if (!is_one || !(m.lower() > one)) {
        ++rec.ambiguous_count;
        continue;
      }
    }
    if (!rec.found() || better(m.measure, i, *rec.best_measure, rec.best_index)) {
      rec.best_poly = cand;
      rec.best_measure = m.measure;
      rec.best_index = i;
    }
  }
}

}  // namespace

SearchRecord search_min_measure(unsigned degree, long bound, double tol, SearchOptions opts) {
  const auto start = std::chrono::steady_clock::now();
  const CandidateBox box(degree, bound);
  if (opts.chunk_size == 0) throw DomainError("chunk size must be positive");
  const std::uint64_t chunks = (box.size() + opts.chunk_size - 1) / opts.chunk_size;
  std::vector<SearchRecord> partial(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++)
      scan(box, c * opts.chunk_size, std::min(box.size(), (c + 1) * opts.chunk_size), tol, partial[c]);
  };
  const unsigned threads = std::max(1U, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          worker();
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  SearchRecord rec;
  rec.degree = degree;
  rec.box_bound = bound;
  rec.candidates_scanned = box.size();
  for (const auto& part : partial) absorb(rec, part);
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace mahler
