#include "toep/partitions.hpp"

#include <algorithm>
#include <map>

#include "toep/error.hpp"

namespace toep {

Partition make_partition(std::vector<long> parts, const std::string& field) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0)
      throw SchemaError(field + ": negative part " + std::to_string(parts[i]));
    if (i > 0 && parts[i] > parts[i - 1])
      throw SchemaError(field + ": parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

long weight(const Partition& p) {
  long w = 0;
  for (long x : p) w += x;
  return w;
}

long length(const Partition& p) { return static_cast<long>(p.size()); }

long part(const Partition& p, long i) {
  if (i < 1 || i > length(p)) return 0;
  return p[static_cast<std::size_t>(i - 1)];
}

std::string partition_str(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

bool contains(const Partition& lambda, const Partition& mu) {
  for (long i = 1; i <= length(lambda); ++i)
    if (part(lambda, i) > part(mu, i)) return false;
  return true;
}

Partition conjugate(const Partition& p) {
  Partition out;
  for (long j = 1; j <= part(p, 1); ++j) {
    long count = 0;
    for (long x : p)
      if (x >= j) ++count;
    out.push_back(count);
  }
  return out;
}

Partition rotated_complement(const Partition& nu, long d, long N) {
  if (d < 0 || N < 0) throw InputError("rotated_complement requires a non-negative box");
  if (length(nu) > N || part(nu, 1) > d)
    throw InputError("partition " + partition_str(nu) + " does not fit in a " +
                     std::to_string(d) + " x " + std::to_string(N) + " box");
  std::vector<long> out;
  for (long j = 1; j <= N; ++j) out.push_back(d - part(nu, N + 1 - j));
  return make_partition(std::move(out), "rotated_complement");
}

Partition partition_from_sequence(const std::vector<long>& t) {
  long N = static_cast<long>(t.size());
  for (long j = 0; j < N; ++j) {
    if (t[static_cast<std::size_t>(j)] < 1)
      throw InputError("sequence terms must be positive");
    if (j > 0 && t[static_cast<std::size_t>(j)] <= t[static_cast<std::size_t>(j - 1)])
      throw InputError("sequence terms must be strictly increasing");
  }
  std::vector<long> out;
  for (long j = 1; j <= N; ++j) out.push_back(t[static_cast<std::size_t>(N - j)] - (N + 1 - j));
  return make_partition(std::move(out), "sequence image");
}

std::vector<long> sequence_from_partition(const Partition& nu, long N) {
  if (length(nu) > N)
    throw InputError("partition " + partition_str(nu) + " has more than " + std::to_string(N) +
                     " parts");
  std::vector<long> t;
  for (long j = 1; j <= N; ++j) t.push_back(part(nu, N + 1 - j) + j);
  return t;
}

Rational centralizer_order(const Partition& phi) {
  std::map<long, long> mult;
  for (long x : phi) ++mult[x];
  Rational z = 1;
  for (auto [k, n] : mult) z *= rat_pow(Rational(k), n) * Rational(factorial(n));
  return z;
}

std::vector<std::pair<long, long>> hooks_and_contents(const Partition& p) {
  Partition conj = conjugate(p);
  std::vector<std::pair<long, long>> out;
  for (long i = 1; i <= length(p); ++i)
    for (long j = 1; j <= part(p, i); ++j)
      out.emplace_back(part(p, i) - j + part(conj, j) - i + 1, j - i);
  return out;
}

Partition plus_rectangle(const Partition& mu, long d, long N) {
  if (d < 0 || N < 0) throw InputError("plus_rectangle requires a non-negative rectangle");
  if (length(mu) > N)
    throw InputError("partition " + partition_str(mu) + " has more than " + std::to_string(N) +
                     " parts");
  std::vector<long> out;
  for (long i = 1; i <= N; ++i) out.push_back(part(mu, i) + d);
  return make_partition(std::move(out), "plus_rectangle");
}

namespace {

void gen_partitions(long n, long maxpart, long maxlen, Partition& prefix,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  if (maxlen == 0) return;
  for (long p = std::min(n, maxpart); p >= 1; --p) {
    prefix.push_back(p);
    gen_partitions(n - p, p, maxlen - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(long n) {
  return partitions_of_max_length(n, n < 0 ? 0 : n);
}

std::vector<Partition> partitions_of_max_length(long n, long maxlen) {
  if (n < 0) throw InputError("cannot partition a negative integer");
  std::vector<Partition> out;
  Partition prefix;
  gen_partitions(n, n, maxlen, prefix, out);
  return out;
}

std::vector<Partition> partitions_in_box(long maxlen, long maxpart) {
  if (maxlen < 0 || maxpart < 0) throw InputError("box dimensions must be non-negative");
  std::vector<Partition> out;
  for (long w = 0; w <= maxlen * maxpart; ++w) {
    Partition prefix;
    gen_partitions(w, maxpart, maxlen, prefix, out);
  }
  return out;
}

namespace {

void gen_sub(const Partition& lambda, long i, long cap, Partition& prefix,
             std::vector<Partition>& out) {
  if (i > length(lambda)) {
    out.push_back(make_partition(prefix, "subpartition"));
    return;
  }
  for (long v = std::min(cap, part(lambda, i)); v >= 0; --v) {
    prefix.push_back(v);
    gen_sub(lambda, i + 1, v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  Partition prefix;
  gen_sub(lambda, 1, part(lambda, 1), prefix, out);
  return out;
}

}  // namespace toep
