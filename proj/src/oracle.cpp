#include "prf/oracle.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace prf::oracle {

Nat id(const Nat& x) { return x; }
Nat pred(const Nat& x) { return nat_monus(x, 1); }
Nat dbl(const Nat& x) { return x * 2; }
Nat square(const Nat& x) { return x * x; }
Nat half(const Nat& x) { return x / 2; }
Nat pow2(const Nat& x) { return nat_pow2(x); }
Nat root(const Nat& x) { return nat_isqrt(x); }
Nat tri(const Nat& x) { return x * (x + 1) / 2; }
Nat tri_inv(const Nat& x) { return (nat_isqrt(8 * x + 1) - 1) / 2; }
Nat pair_first(const Nat& z) { return z - tri(tri_inv(z)); }
Nat pair_second(const Nat& z) { return tri(tri_inv(z) + 1) - z - 1; }
Nat is_zero(const Nat& x) { return x == 0 ? 1 : 0; }
Nat sgn(const Nat& x) { return x == 0 ? 0 : 1; }
Nat parity(const Nat& x) { return x & 1; }
Nat sq_excess(const Nat& x) { return x - square(root(x)); }
Nat is_square(const Nat& x) { return sq_excess(x) == 0 ? 1 : 0; }

// Orbit step used to track perfect squares through a mod-3 flag. Exactly one
// case applies for x > 0; every branch below is an exact division.
Nat w_step(const Nat& x) {
  if (x == 0) return 2;
  if (x % 10 == 0) return 3 * x / 2;
  if (x % 5 == 0 && (x & 1) == 1) return 2 * x / 5;
  if (x % 3 == 0) return 2 * x / 3;
  return 15 * x / 2;
}

Nat root_track(const Nat& x) { return x + 2 * root(x); }
Nat y_line(const Nat& x) { return 2 * x - root(x); }
Nat z_line(const Nat& x) { return (x * x + 3 * x) / 2; }
Nat gsq(const Nat& x) { return (x + 1) * (x + 1); }
Nat hqd(const Nat& x) { return (x + 1) * (x + 4) / 2; }

Nat onehot(unsigned n, const Nat& x) { return x == n ? 1 : 0; }
Nat mul_by(unsigned n, const Nat& x) { return x * n; }
Nat cyc(unsigned n, const Nat& x) {
  if (n < 2) throw BadIndex("cycle step needs modulus >= 2");
  return x + 2 <= n ? Nat(x + 1) : Nat(0);
}
Nat mod_by(unsigned n, const Nat& x) { return x % n; }
Nat div_by(unsigned n, const Nat& x) { return x / n; }
Nat pred_at(const Nat& a, const Nat& x) { return x == 0 ? a : Nat(x - 1); }
Nat const_at(const Nat& a, const Nat&) { return a; }
Nat spike_at(const Nat& a, const Nat& x) { return x == 0 ? a : Nat(0); }

Nat add2(const Nat& x, const Nat& y) { return x + y; }
Nat monus2(const Nat& x, const Nat& y) { return nat_monus(x, y); }
Nat dist2(const Nat& x, const Nat& y) { return nat_dist(x, y); }
Nat pair2(const Nat& x, const Nat& y) { return tri(x + y) + x; }
Nat eq2(const Nat& x, const Nat& y) { return x == y ? 1 : 0; }

Nat f_seq(unsigned n, const Nat& x) {
  switch (n) {
    case 0: return x + 1;
    case 1: return x + 2;
    case 2: return 2 * x + 3;
    case 3: return 8 * nat_pow2(x) - 3;
    default: throw InfeasibleIndex("f_" + std::to_string(n) + " grows too fast to evaluate exactly");
  }
}

Nat b_seq(unsigned n, const Nat& x) {
  switch (n) {
    case 0: return x + 1;
    case 1: return 3 * x;
    case 2: return (nat_pow3(x + 1) - 3) / 2;
    case 3: {
      if (x > 3) throw InfeasibleArgument("B_3 is exact only for x <= 3, got " + x.str());
      Nat v = 0;  // B_3(x+1) = B_2(B_3(x)) + 5
      for (Nat i = 0; i < x; ++i) v = b_seq(2, v) + 5;
      return v;
    }
    default: throw InfeasibleIndex("B_" + std::to_string(n) + " grows too fast to evaluate exactly");
  }
}

namespace {

// Ascending memo for a unary recurrence v(0) = 0, v(k+1) = step(k, v(k)).
const Nat& ascend(std::vector<Nat>& cache, const Nat& x, Nat (*step)(const Nat&, const Nat&)) {
  std::size_t need = nat_to_u64(x, "recurrence argument");
  if (cache.empty()) cache.push_back(0);
  while (cache.size() <= need) {
    Nat k = cache.size() - 1;
    cache.push_back(step(k, cache.back()));
  }
  return cache[need];
}

Nat fprime_step(const Nat& k, const Nat& prev) {
  Nat z = half(pred(prev));
  return parity(z) + z + pow2(pred(k + is_zero(parity(z)))) + pow2(pred(k + dbl(is_zero(parity(z))))) +
         is_zero(is_zero(k));
}

Nat hsub_step(const Nat& k, const Nat& prev) { return pred(prev + dbl(parity(root(k)))); }

}  // namespace

Nat fprime(const Nat& x) {
  thread_local std::vector<Nat> cache;
  return ascend(cache, x, fprime_step);
}

Nat hsub(const Nat& x) {
  thread_local std::vector<Nat> cache;
  return ascend(cache, x, hsub_step);
}

Nat gpow(const Nat& x) { return x >= 2 && (x & (x - 1)) == 0 ? 1 : 0; }

Nat alpha(const Nat& x) { return (x & 1) == 1 ? nat_pow2(x + 1) : Nat(0); }

Nat beta(const Nat& x) { return (x & 1) == 0 ? dbl(x) : Nat(0); }

namespace {

unsigned tail_index(const std::string& name, std::size_t prefix_len) {
  return static_cast<unsigned>(std::stoul(name.substr(prefix_len)));
}

Nat const0(const Nat&) { return 0; }
Nat const1(const Nat&) { return 1; }

Nat unary_apply(const std::string& name, const Nat& x) {
  static const std::map<std::string, Nat (*)(const Nat&)> plain = {
      {"I", id},         {"P", pred},        {"D", dbl},        {"Sq", square},   {"Hf", half},
      {"Pw", pow2},      {"Rt", root},       {"A", tri},        {"V", tri_inv},   {"K", pair_first},
      {"L", pair_second},{"O", is_zero},     {"Sgn", sgn},      {"N", parity},    {"E", sq_excess},
      {"Q", is_square},  {"W", w_step},      {"R", root_track}, {"Y", y_line},    {"Z", z_line},
      {"Gsq", gsq},      {"Hqd", hqd},       {"fprime", fprime},{"hsub", hsub},   {"gpow", gpow},
      {"alpha", alpha},  {"beta", beta},     {"zero", const0},  {"one", const1}};
  if (auto it = plain.find(name); it != plain.end()) return it->second(x);
  if (name.size() >= 2 && name[0] == 'f' && std::isdigit(static_cast<unsigned char>(name[1])))
    return f_seq(tail_index(name, 1), x);
  if (name.size() >= 2 && name[0] == 'B' && std::isdigit(static_cast<unsigned char>(name[1])))
    return b_seq(tail_index(name, 1), x);
  if (name.size() >= 2 && name[0] == 'O' && std::isdigit(static_cast<unsigned char>(name[1])))
    return onehot(tail_index(name, 1), x);
  if (name.size() >= 2 && name[0] == 'M' && std::isdigit(static_cast<unsigned char>(name[1])) &&
      name.rfind("Mod", 0) != 0)
    return mul_by(tail_index(name, 1), x);
  if (name.size() >= 2 && name[0] == 'C' && std::isdigit(static_cast<unsigned char>(name[1])))
    return cyc(tail_index(name, 1), x);
  if (name.rfind("Mod", 0) == 0) return mod_by(tail_index(name, 3), x);
  if (name.rfind("Div", 0) == 0) return div_by(tail_index(name, 3), x);
  if (name.rfind("Phat", 0) == 0) return pred_at(tail_index(name, 4), x);
  if (name.rfind("Abar", 0) == 0) return const_at(tail_index(name, 4), x);
  if (name.rfind("Ohat", 0) == 0) return spike_at(tail_index(name, 4), x);
  throw UnknownName("no unary reference function named " + name);
}

Nat binary_apply(const std::string& name, const Nat& x, const Nat& y) {
  if (name == "add2") return add2(x, y);
  if (name == "monus2") return monus2(x, y);
  if (name == "dist2") return dist2(x, y);
  if (name == "J2") return pair2(x, y);
  if (name == "delta2") return eq2(x, y);
  throw UnknownName("no binary reference function named " + name);
}

}  // namespace

Nat atom_apply(const std::string& name, const std::vector<Nat>& args) {
  if (args.size() != 1 && args.size() != 2)
    throw ArityError("reference functions take 1 or 2 arguments, got " +
                     std::to_string(args.size()));
  try {
    if (args.size() == 1) return unary_apply(name, args[0]);
    return binary_apply(name, args[0], args[1]);
  } catch (const UnknownName&) {
    // known at the other arity? then the name was fine and the call was not
    bool other_arity_knows = true;
    try {
      if (args.size() == 1)
        binary_apply(name, 0, 0);
      else
        unary_apply(name, 0);
    } catch (const UnknownName&) {
      other_arity_knows = false;
    } catch (...) {
      // a domain complaint still means the probe reached a real function
    }
    if (!other_arity_knows) throw UnknownName("no reference function named " + name);
    throw ArityError("reference function " + name + " does not take " +
                     std::to_string(args.size()) + " arguments");
  }
}

std::function<Nat(const Nat&)> unary_fn(const std::string& name) {
  unary_apply(name, 0);  // validate eagerly
  return [name](const Nat& x) { return unary_apply(name, x); };
}

std::function<Nat(const Nat&, const Nat&)> binary_fn(const std::string& name) {
  binary_apply(name, 0, 0);  // validate eagerly
  return [name](const Nat& x, const Nat& y) { return binary_apply(name, x, y); };
}

}  // namespace prf::oracle
