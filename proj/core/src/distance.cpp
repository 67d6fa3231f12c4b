#include "cyclo/distance.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>

#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo {

namespace {

using Histogram = std::vector<std::uint64_t>;

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs `chunk(i, hist)` for i in [0, chunks) across workers, each with a
/// private histogram, and merges the results.
template <typename Chunk>
Histogram run_chunks(std::uint64_t chunks, std::size_t n, unsigned threads, Chunk&& chunk) {
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
  std::vector<Histogram> partial(threads, Histogram(n + 1, 0));
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < chunks; ++i) chunk(i, partial[0]);
    return partial[0];
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::uint64_t i = next++; i < chunks; i = next++) chunk(i, partial[t]);
    });
  }
  for (auto& w : workers) w.join();
  Histogram total(n + 1, 0);
  for (const auto& h : partial) {
    for (std::size_t w = 0; w <= n; ++w) total[w] += h[w];
  }
  return total;
}

/// Number of leading message coordinates fixed per chunk.
unsigned prefix_width(std::uint64_t q, std::size_t k, unsigned threads) {
  if (threads <= 1) return 0;
  unsigned s = 0;
  std::uint64_t chunks = 1;
  while (s < k && chunks < 16ull * threads) {
    chunks *= q;
    ++s;
  }
  return s;
}

Histogram binary_kernel(const GenMatrix& g, unsigned threads) {
  const std::size_t k = g.rows();
  const std::size_t n = g.length();
  std::vector<std::uint64_t> masks(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!g.at(i, j).is_zero()) masks[i] |= std::uint64_t{1} << j;
    }
  }
  const unsigned s = prefix_width(2, k, threads);
  const std::size_t low = k - s;
  const std::uint64_t steps = std::uint64_t{1} << low;
  return run_chunks(std::uint64_t{1} << s, n, threads, [&](std::uint64_t prefix, Histogram& hist) {
    std::uint64_t cw = 0;
    for (unsigned b = 0; b < s; ++b) {
      if ((prefix >> b) & 1) cw ^= masks[low + b];
    }
    ++hist[std::popcount(cw)];
    // Reflected Gray code: step i flips message bit ctz(i).
    for (std::uint64_t i = 1; i < steps; ++i) {
      cw ^= masks[std::countr_zero(i)];
      ++hist[std::popcount(cw)];
    }
  });
}

/// q-ary modular Gray code over the low coordinates: each step increments
/// exactly one Gray digit by one (mod q), i.e. adds delta * row to the
/// running codeword.
template <typename Sym, typename Adder>
Histogram qary_kernel(const GenMatrix& g, unsigned threads, Adder add) {
  const FieldCtx& f = g.field();
  const std::uint32_t q = f.size();
  const std::size_t k = g.rows();
  const std::size_t n = g.length();

  // scaled[(r * q + s) * n + j] = s * g[r][j]
  std::vector<Sym> scaled(k * q * n);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::uint32_t s = 0; s < q; ++s) {
      for (std::size_t j = 0; j < n; ++j) {
        scaled[(r * q + s) * n + j] = static_cast<Sym>(f.mul(Fe{s}, g.at(r, j)).v);
      }
    }
  }
  std::vector<std::uint32_t> delta(q);
  for (std::uint32_t a = 0; a < q; ++a) delta[a] = f.sub(Fe{(a + 1) % q}, Fe{a}).v;

  const unsigned s = prefix_width(q, k, threads);
  const std::size_t low = k - s;
  const std::uint64_t chunks = *checked_pow(q, s);

  return run_chunks(chunks, n, threads, [&](std::uint64_t prefix, Histogram& hist) {
    std::vector<Sym> cw(n, 0);
    for (unsigned b = 0; b < s; ++b) {
      const std::uint32_t digit = static_cast<std::uint32_t>(prefix % q);
      prefix /= q;
      const Sym* v = &scaled[((low + b) * q + digit) * n];
      for (std::size_t j = 0; j < n; ++j) cw[j] = add(cw[j], v[j]);
    }
    std::size_t weight = 0;
    for (Sym c : cw) weight += c != 0;
    ++hist[weight];

    std::vector<std::uint32_t> counter(low, 0), gray(low, 0);
    for (;;) {
      std::size_t j = 0;
      while (j < low && counter[j] == q - 1) counter[j++] = 0;
      if (j == low) break;
      ++counter[j];
      const std::uint32_t old = gray[j];
      gray[j] = old + 1 == q ? 0 : old + 1;
      const Sym* v = &scaled[(j * q + delta[old]) * n];
      for (std::size_t t = 0; t < n; ++t) {
        const Sym before = cw[t];
        const Sym after = add(before, v[t]);
        weight += static_cast<std::size_t>(after != 0) - static_cast<std::size_t>(before != 0);
        cw[t] = after;
      }
      ++hist[weight];
    }
  });
}

Histogram enumerate(const GenMatrix& basis, unsigned threads) {
  const FieldCtx& f = basis.field();
  const std::size_t n = basis.length();
  if (basis.rows() == 0) {
    Histogram h(n + 1, 0);
    h[0] = 1;
    return h;
  }
  if (f.size() == 2 && n <= 64) return binary_kernel(basis, threads);
  if (f.size() <= 256) {
    const std::uint32_t q = f.size();
    std::vector<std::uint8_t> table(q * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) table[a * q + b] = static_cast<std::uint8_t>(f.add(Fe{a}, Fe{b}).v);
    }
    const std::uint8_t* t = table.data();
    return qary_kernel<std::uint8_t>(basis, threads, [t, q](std::uint8_t a, std::uint8_t b) {
      return t[a * q + b];
    });
  }
  return qary_kernel<std::uint32_t>(basis, threads, [&f](std::uint32_t a, std::uint32_t b) {
    return f.add(Fe{a}, Fe{b}).v;
  });
}

}  // namespace

std::uint64_t codeword_count(const FieldCtx& field, std::size_t k) {
  return checked_pow(field.size(), k).value_or(UINT64_MAX);
}

DistanceReport min_distance(const GenMatrix& g, EnumerationOptions opts) {
  const auto start = std::chrono::steady_clock::now();
  const GenMatrix basis = rref(g);
  if (basis.rows() == 0) fail(ErrorKind::ZeroCode, "minimum distance of the zero code is undefined");
  const std::uint64_t total = codeword_count(basis.field(), basis.rows());
  const std::uint64_t required = total == UINT64_MAX ? UINT64_MAX : total - 1;
  if (required > opts.budget) throw BudgetExceeded(required, opts.budget);

  const Histogram hist = enumerate(basis, resolve_threads(opts.threads));
  DistanceReport report;
  report.codewords_enumerated = required;
  for (std::size_t w = 1; w < hist.size(); ++w) {
    if (hist[w] != 0) {
      report.d = w;
      break;
    }
  }
  report.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

DistanceReport min_distance(const CyclicCode& c, EnumerationOptions opts) {
  return min_distance(generator_matrix(c), opts);
}

std::vector<std::uint64_t> weight_distribution(const GenMatrix& g, EnumerationOptions opts) {
  const GenMatrix basis = rref(g);
  const std::uint64_t total = codeword_count(basis.field(), basis.rows());
  if (total > opts.budget) throw BudgetExceeded(total, opts.budget);
  return enumerate(basis, resolve_threads(opts.threads));
}

std::vector<std::uint64_t> weight_distribution(const CyclicCode& c, EnumerationOptions opts) {
  return weight_distribution(generator_matrix(c), opts);
}

}  // namespace cyclo
