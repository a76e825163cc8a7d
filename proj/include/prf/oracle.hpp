#pragma once

#include <functional>
#include <string>
#include <vector>

#include "prf/errors.hpp"
#include "prf/nat.hpp"

// Reference semantics for every named primitive, computed by direct integer
// arithmetic only. The evaluator and catalog never feed back into this layer,
// so these functions can serve as an independent check of term evaluation.
namespace prf::oracle {

Nat id(const Nat& x);         // x
Nat pred(const Nat& x);       // x monus 1
Nat dbl(const Nat& x);        // 2x
Nat square(const Nat& x);     // x^2
Nat half(const Nat& x);       // floor(x/2)
Nat pow2(const Nat& x);       // 2^x
Nat root(const Nat& x);       // floor(sqrt(x))
Nat tri(const Nat& x);        // x(x+1)/2
Nat tri_inv(const Nat& x);    // largest v with tri(v) <= x
Nat pair_first(const Nat& z); // z - tri(tri_inv(z))
Nat pair_second(const Nat& z);// tri(tri_inv(z)+1) - z - 1
Nat is_zero(const Nat& x);    // [x == 0]
Nat sgn(const Nat& x);        // min(x,1)
Nat parity(const Nat& x);     // x mod 2
Nat sq_excess(const Nat& x);  // x - root(x)^2
Nat is_square(const Nat& x);  // [x is a perfect square]
Nat w_step(const Nat& x);     // five-case orbit step, see w_step in oracle.cpp
Nat root_track(const Nat& x); // x + 2*root(x)
Nat y_line(const Nat& x);     // 2x - root(x)
Nat z_line(const Nat& x);     // (x^2+3x)/2
Nat gsq(const Nat& x);        // (x+1)^2
Nat hqd(const Nat& x);        // (x+1)(x+4)/2

Nat onehot(unsigned n, const Nat& x);    // [x == n]
Nat mul_by(unsigned n, const Nat& x);    // n*x
Nat cyc(unsigned n, const Nat& x);       // x+1 if x <= n-2 else 0 (cycle step for mod n)
Nat mod_by(unsigned n, const Nat& x);    // x mod n
Nat div_by(unsigned n, const Nat& x);    // floor(x/n)
Nat pred_at(const Nat& a, const Nat& x); // a if x == 0 else x-1
Nat const_at(const Nat& a, const Nat&);  // a
Nat spike_at(const Nat& a, const Nat& x);// a if x == 0 else 0

Nat add2(const Nat& x, const Nat& y);
Nat monus2(const Nat& x, const Nat& y);
Nat dist2(const Nat& x, const Nat& y);
Nat pair2(const Nat& x, const Nat& y);   // tri(x+y)+x
Nat eq2(const Nat& x, const Nat& y);     // [x == y]

// Fast-growing reference ladder: n = 0..3 exact, larger indices refused.
Nat f_seq(unsigned n, const Nat& x);
// Iterated-successor ladder: B0..B2 exact everywhere, B3 exact for x <= 3.
Nat b_seq(unsigned n, const Nat& x);

Nat fprime(const Nat& x);  // ascending recurrence, cached per thread
Nat hsub(const Nat& x);    // ascending recurrence, cached per thread
Nat gpow(const Nat& x);    // [x = 2^k for some k >= 1]
Nat alpha(const Nat& x);   // 2^(x+1) if x odd else 0
Nat beta(const Nat& x);    // 2x if x even else 0

// Apply the reference semantics of a registry atom by name.
Nat atom_apply(const std::string& name, const std::vector<Nat>& args);

// Named unary reference function for check specs: every unary atom name plus
// "fprime", "hsub", "gpow", "alpha", "beta", "zero", "one". Throws UnknownName.
std::function<Nat(const Nat&)> unary_fn(const std::string& name);
// Named binary reference: "add2", "monus2", "dist2", "J2", "delta2".
std::function<Nat(const Nat&, const Nat&)> binary_fn(const std::string& name);

}  // namespace prf::oracle
