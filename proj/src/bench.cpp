#include "aigsynth/bench.hpp"

#include "aigsynth/circuit.hpp"
#include "aigsynth/errors.hpp"

namespace aigsynth {

namespace {

Aig gen_add(unsigned n) {
  AigBuilder b;
  std::vector<unsigned> a_in, b_in, s_out;
  for (unsigned i = 0; i < n; ++i) a_in.push_back(b.add_input("a" + std::to_string(i)));
  for (unsigned i = 0; i < n; ++i) b_in.push_back(b.add_input("b" + std::to_string(i)));
  for (unsigned i = 0; i < n; ++i)
    s_out.push_back(b.add_input(std::string(kControllablePrefix) + "s" + std::to_string(i)));
  unsigned mism_latch = b.add_latch("mismatch_seen");
  unsigned err_latch = b.add_latch("error");

  // Reference sum modulo 2^n via a ripple-carry chain.
  std::vector<unsigned> ref(n);
  unsigned carry = 0;
  for (unsigned i = 0; i < n; ++i) {
    unsigned axb = b.make_xor(a_in[i], b_in[i]);
    ref[i] = b.make_xor(axb, carry);
    carry = b.make_or(b.make_and(a_in[i], b_in[i]), b.make_and(carry, axb));
  }

  std::vector<unsigned> diffs;
  for (unsigned i = 0; i < n; ++i) diffs.push_back(b.make_xor(s_out[i], ref[i]));
  unsigned mismatch = b.make_or(diffs);

  b.set_latch_next(mism_latch, mismatch);
  b.set_latch_next(err_latch, b.make_or(err_latch, mism_latch));
  b.add_output(err_latch, "bad");
  return b.finish();
}

Aig gen_mult(unsigned n) {
  AigBuilder b;
  std::vector<unsigned> a_in, b_in, p_out;
  for (unsigned i = 0; i < n; ++i) a_in.push_back(b.add_input("a" + std::to_string(i)));
  for (unsigned i = 0; i < n; ++i) b_in.push_back(b.add_input("b" + std::to_string(i)));
  for (unsigned i = 0; i < 2 * n; ++i)
    p_out.push_back(b.add_input(std::string(kControllablePrefix) + "p" + std::to_string(i)));

  // Reference product by shift-and-add over 2n-bit rows.
  std::vector<unsigned> acc(2 * n, 0);
  for (unsigned j = 0; j < n; ++j) {
    std::vector<unsigned> row(2 * n, 0);
    for (unsigned i = 0; i < n; ++i)
      if (i + j < 2 * n) row[i + j] = b.make_and(a_in[i], b_in[j]);
    unsigned carry = 0;
    for (unsigned k = 0; k < 2 * n; ++k) {
      unsigned axb = b.make_xor(acc[k], row[k]);
      unsigned sum = b.make_xor(axb, carry);
      carry = b.make_or(b.make_and(acc[k], row[k]), b.make_and(carry, axb));
      acc[k] = sum;
    }
  }

  std::vector<unsigned> diffs;
  for (unsigned k = 0; k < 2 * n; ++k) diffs.push_back(b.make_xor(p_out[k], acc[k]));
  b.add_output(b.make_or(diffs), "bad");
  return b.finish();
}

}  // namespace

Aig gen_benchmark(BenchKind kind, unsigned bits) {
  if (bits == 0) throw error("benchmark size must be at least 1 bit");
  if (bits > 16) throw error("benchmark size above 16 bits is not supported");
  return kind == BenchKind::kAdd ? gen_add(bits) : gen_mult(bits);
}

std::string bench_name(BenchKind kind, unsigned bits) {
  return (kind == BenchKind::kAdd ? "add" : "mult") + std::to_string(bits);
}

}  // namespace aigsynth
