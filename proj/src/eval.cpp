#include "prf/eval.hpp"

#include <list>
#include <map>
#include <unordered_map>
#include <utility>

#include "prf/errors.hpp"
#include "prf/oracle.hpp"
#include "prf/parser.hpp"

namespace prf {
namespace {

std::string frame_of(const TermPtr& t) {
  std::string s = to_source(t);
  if (s.size() > 96) s = s.substr(0, 93) + "...";
  return s;
}

std::size_t hash_args(std::size_t seed, const std::vector<Nat>& args) {
  for (const Nat& a : args) boost::hash_combine(seed, nat_hash(a));
  return seed;
}

struct Key {
  TermPtr t;
  std::vector<Nat> args;
  std::size_t h;
};
struct KeyHash {
  std::size_t operator()(const Key& k) const { return k.h; }
};
struct KeyEq {
  bool operator()(const Key& a, const Key& b) const {
    return a.h == b.h && a.args == b.args && term_equal(a.t, b.t);
  }
};

class Session {
 public:
  explicit Session(const EvalConfig& cfg) : cfg_(cfg) {}

  EvalOutcome run(const TermPtr& t, const std::vector<Nat>& args) {
    point_base_ = steps_;
    std::uint64_t amb0 = amb_hits_, memo0 = memo_hits_;
    EvalOutcome out;
    out.value = ev(t, args);
    out.steps_used = steps_ - point_base_;
    out.ambiguous_minus_hits = amb_hits_ - amb0;
    out.memo_hits = memo_hits_ - memo0;
    return out;
  }

 private:
  const EvalConfig& cfg_;
  std::uint64_t steps_ = 0;
  std::uint64_t point_base_ = 0;
  std::uint64_t amb_hits_ = 0;
  std::uint64_t memo_hits_ = 0;

  // value memo, LRU over (subterm, argument tuple)
  std::list<std::pair<Key, Nat>> lru_;
  std::unordered_map<Key, std::list<std::pair<Key, Nat>>::iterator, KeyHash, KeyEq> memo_;
  // unroll waypoints per (iteration node, leading args): k -> value at k,
  // kept sparse so a later call can resume below an earlier call's target
  std::unordered_map<Key, std::map<Nat, Nat>, KeyHash, KeyEq> frontier_;

  void tick(const TermPtr& t, const Nat* arg0) {
    if (++steps_ - point_base_ > cfg_.budget) {
      std::optional<Nat> arg;
      if (arg0) arg = *arg0;
      throw BudgetExceededError(steps_ - point_base_, frame_of(t), arg);
    }
  }

  Key make_key(const TermPtr& t, std::vector<Nat> args) {
    std::size_t h = hash_args(t->hash(), args);
    return Key{t, std::move(args), h};
  }

  // Keys over huge arguments essentially never repeat, but copying and hashing
  // them costs a full pass over the value; caching is counterproductive there.
  static bool args_oversize(const std::vector<Nat>& args) {
    for (const Nat& a : args)
      if (a > 0 && msb(a) >= 4096) return true;
    return false;
  }

  const Nat* memo_find(const Key& k) {
    auto it = memo_.find(k);
    if (it == memo_.end()) return nullptr;
    lru_.splice(lru_.begin(), lru_, it->second);
    ++memo_hits_;
    return &it->second->second;
  }

  void memo_put(Key k, const Nat& v) {
    if (memo_.count(k)) return;
    lru_.emplace_front(std::move(k), v);
    memo_[lru_.front().first] = lru_.begin();
    if (lru_.size() > cfg_.memo_capacity) {
      memo_.erase(lru_.back().first);
      lru_.pop_back();
    }
  }

  Nat ev(const TermPtr& t, const std::vector<Nat>& args) {
    if (args.size() != t->arity())
      throw ArityError("expected " + std::to_string(t->arity()) + " arguments, got " +
                       std::to_string(args.size()));
    tick(t, args.empty() ? nullptr : &args[0]);
    switch (t->kind()) {
      case Kind::Const: return t->number();
      case Kind::Succ: return args[0] + 1;
      case Kind::Proj: return args[t->proj_k() - 1];
      case Kind::Atom: {
        if (cfg_.mode == EvalMode::Deep && cfg_.expander) {
          if (TermPtr def = cfg_.expander(t->atom_name())) return ev(def, args);
        }
        return oracle::atom_apply(t->atom_name(), args);
      }
      default: break;
    }

    if (cfg_.memo_capacity > 0 && !args_oversize(args)) {
      Key key = make_key(t, args);
      if (const Nat* hit = memo_find(key)) return *hit;
      Nat v = apply(t, args);
      memo_put(std::move(key), v);
      return v;
    }
    return apply(t, args);
  }

  Nat apply(const TermPtr& t, const std::vector<Nat>& args) {
    switch (t->kind()) {
      case Kind::Subst: {
        std::vector<Nat> vals;
        vals.reserve(t->child_count() - 1);
        for (std::size_t i = 1; i < t->child_count(); ++i) vals.push_back(ev(t->child(i), args));
        return ev(t->child(0), vals);
      }
      case Kind::Compose:
        return ev(t->child(0), {ev(t->child(1), args)});
      case Kind::OpAdd:
        return ev(t->child(0), args) + ev(t->child(1), args);
      case Kind::OpMonus:
        return nat_monus(ev(t->child(0), args), ev(t->child(1), args));
      case Kind::OpDist:
        return nat_dist(ev(t->child(0), args), ev(t->child(1), args));
      case Kind::OpAmbMinus: {
        Nat l = ev(t->child(0), args), r = ev(t->child(1), args);
        if (cfg_.flag_ambiguous_minus && l < r) ++amb_hits_;
        return nat_monus(l, r);
      }
      case Kind::OpPairJ:
        return oracle::pair2(ev(t->child(0), args), ev(t->child(1), args));
      case Kind::OpPlus:
        return ev(t->child(0), args) + args[0];
      case Kind::Power: {
        Nat u = args[0];
        for (Nat i = 0; i < t->number(); ++i) {
          tick(t, &u);
          u = ev(t->child(0), {u});
        }
        return u;
      }
      case Kind::PureIter:
      case Kind::PureIterA:
        return iterate(t, args, args[0], t->kind() == Kind::PureIterA ? t->number() : Nat(0),
                       [&](const Nat&, const Nat& prev) { return ev(t->child(0), {prev}); });
      case Kind::MixedIter:
      case Kind::MixedIterA:
        return iterate(t, args, args[0], t->kind() == Kind::MixedIterA ? t->number() : Nat(0),
                       [&](const Nat& k, const Nat& prev) { return ev(t->child(0), {k, prev}); });
      case Kind::PrimRec: {
        std::vector<Nat> lead(args.begin(), args.end() - 1);
        Nat base = ev(t->child(0), lead);
        return iterate(t, args, args.back(), base, [&](const Nat& k, const Nat& prev) {
          std::vector<Nat> ga = lead;
          ga.push_back(k);
          ga.push_back(prev);
          return ev(t->child(1), ga);
        });
      }
      default:
        throw UnsupportedNode("unexpected node in evaluation");
    }
  }

  // Shared unroll loop: value at 0 is `base`, step maps (k, value at k) to
  // value at k+1. Resumes from the furthest previously reached point when
  // the prefix cache is enabled; progress survives a budget death.
  template <typename Step>
  Nat iterate(const TermPtr& t, const std::vector<Nat>& args, const Nat& target, Nat base,
              Step step) {
    // Short unrolls are cheaper to replay than to track; the value memo already
    // catches exact repeats, so waypoints only pay off past this length.
    const bool track = cfg_.memo_capacity > 0 && target >= 64;
    Nat k = 0;
    Nat u = std::move(base);
    Key fkey{};
    if (track) {
      std::vector<Nat> lead(args.begin(), args.end() - 1);
      std::size_t h = hash_args(t->hash() ^ 0x9e3779b97f4a7c15ull, lead);
      fkey = Key{t, std::move(lead), h};
      auto it = frontier_.find(fkey);
      if (it != frontier_.end()) {
        auto wp = it->second.upper_bound(target);
        if (wp != it->second.begin()) {
          --wp;
          k = wp->first;
          u = wp->second;
          if (k > 0) ++memo_hits_;
        }
      }
    }
    try {
      while (k < target) {
        tick(t, &k);
        u = step(k, u);
        ++k;
      }
    } catch (const BudgetExceededError&) {
      if (track) record_waypoint(fkey, k, u);
      throw;
    }
    if (track) record_waypoint(fkey, k, u);
    return u;
  }

  void record_waypoint(const Key& fkey, const Nat& k, const Nat& u) {
    if (cfg_.memo_capacity == 0 || k == 0) return;
    if (frontier_.size() > 4096) frontier_.clear();
    auto& m = frontier_[fkey];
    m.insert_or_assign(k, u);
    if (m.size() > 64) {  // thin the interior, keeping the two extremes
      auto it = std::next(m.begin());
      while (it != m.end() && std::next(it) != m.end()) {
        it = m.erase(it);
        if (it == m.end() || std::next(it) == m.end()) break;
        ++it;
      }
    }
  }
};

}  // namespace

EvalOutcome eval(const TermPtr& t, const std::vector<Nat>& args, const EvalConfig& cfg) {
  Session s(cfg);
  return s.run(t, args);
}

RangeResult eval_points(const TermPtr& t, const std::vector<std::vector<Nat>>& points,
                        const EvalConfig& cfg) {
  RangeResult out;
  Session s(cfg);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != t->arity()) throw ArityError("point arity mismatch");
    try {
      out.points.push_back(s.run(t, points[i]));
    } catch (const BudgetExceededError&) {
      out.died_at = Nat(i);
      break;
    }
  }
  return out;
}

RangeResult eval_unary_range(const TermPtr& t, const Nat& lo, const Nat& hi,
                             const EvalConfig& cfg) {
  if (t->arity() != 1) throw ArityError("range evaluation needs a unary term");
  if (lo > hi) throw ArityError("range evaluation needs lo <= hi");
  RangeResult out;
  Session s(cfg);
  for (Nat x = lo; x <= hi; ++x) {
    try {
      out.points.push_back(s.run(t, {x}));
    } catch (const BudgetExceededError&) {
      out.died_at = x;
      break;
    }
  }
  return out;
}

}  // namespace prf
