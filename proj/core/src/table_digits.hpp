#pragma once

// Internal: digit-expanded views of a function table for enumeration loops.

#include <cstdint>
#include <vector>

#include "maskent/family.hpp"

namespace maskent::detail {

struct TableDigits {
  std::uint32_t q;
  std::size_t n;
  std::uint64_t size;                  // q^n
  std::vector<std::uint32_t> inputs;   // inputs[x * n + i] = x_i
  std::vector<std::uint32_t> outputs;  // outputs[x * n + i] = f_i(x)
  std::vector<std::uint64_t> place;    // place[i] = q^i

  explicit TableDigits(const FunctionTable& f) : q(f.q()), n(f.n()), size(f.domain_size()) {
    inputs.resize(size * n);
    outputs.resize(size * n);
    place.resize(n);
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < n; ++i, scale *= q) place[i] = scale;
    for (std::uint64_t x = 0; x < size; ++x) {
      std::uint64_t in = x;
      std::uint64_t out = f.outputs()[x];
      for (std::size_t i = 0; i < n; ++i) {
        inputs[x * n + i] = static_cast<std::uint32_t>(in % q);
        outputs[x * n + i] = static_cast<std::uint32_t>(out % q);
        in /= q;
        out /= q;
      }
    }
  }

  std::vector<std::uint32_t> digits_of(std::uint64_t code) const {
    std::vector<std::uint32_t> d(n);
    for (auto& v : d) {
      v = static_cast<std::uint32_t>(code % q);
      code /= q;
    }
    return d;
  }
};

/// Fills `out[x]` with the code of g_k(x) for every input x.
inline void masked_outputs(const Field& field, const TableDigits& t, const std::vector<std::uint32_t>& k,
                           std::vector<std::uint64_t>& out) {
  out.resize(t.size);
  for (std::uint64_t x = 0; x < t.size; ++x) {
    const std::uint32_t* in = &t.inputs[x * t.n];
    const std::uint32_t* fo = &t.outputs[x * t.n];
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < t.n; ++i) {
      code += field.add_row(fo[i])[field.mul_row(k[i])[in[i]]] * t.place[i];
    }
    out[x] = code;
  }
}

}  // namespace maskent::detail
