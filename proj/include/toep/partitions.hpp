#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toep/rational.hpp"

namespace toep {

// Canonical form: weakly decreasing positive parts, no trailing zeros.
using Partition = std::vector<long>;

// Validates and canonicalizes (strips trailing zeros). SchemaError names
// `field` on non-monotone or negative input.
Partition make_partition(std::vector<long> parts, const std::string& field = "partition");

long weight(const Partition& p);
long length(const Partition& p);
long part(const Partition& p, long i);  // 1-based; zero beyond the length

std::string partition_str(const Partition& p);

// True when lambda fits inside mu part-by-part.
bool contains(const Partition& lambda, const Partition& mu);

Partition conjugate(const Partition& p);

// Complement of nu inside the d x N box, rotated half a turn:
// result_j = d - nu_{N+1-j}. InputError when nu does not fit the box.
Partition rotated_complement(const Partition& nu, long d, long N);

// Strictly increasing positive t of length N maps to the partition with
// nu_{N+1-j} = t_j - j; the two functions are mutually inverse.
Partition partition_from_sequence(const std::vector<long>& t);
std::vector<long> sequence_from_partition(const Partition& nu, long N);

// Cycle-type centralizer order: product over distinct part sizes k of
// k^(multiplicity) * multiplicity!.
Rational centralizer_order(const Partition& phi);

// (hook length, content) per cell in row-major order.
std::vector<std::pair<long, long>> hooks_and_contents(const Partition& p);

// Adds d to the first N parts (mu padded with zeros to length N).
// InputError when mu has more than N parts.
Partition plus_rectangle(const Partition& mu, long d, long N);

// Descending-lex enumeration (largest first part first).
std::vector<Partition> partitions_of(long n);
std::vector<Partition> partitions_of_max_length(long n, long maxlen);
// All partitions with at most maxlen parts, each at most maxpart, ordered by
// weight then descending-lex.
std::vector<Partition> partitions_in_box(long maxlen, long maxpart);
std::vector<Partition> subpartitions(const Partition& lambda);

}  // namespace toep
