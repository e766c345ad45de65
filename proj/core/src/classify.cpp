#include <utility>

#include "closed_form.hpp"
#include "q4rank/rank.hpp"

namespace q4rank {
namespace {

// (p/l)_4 (l/p)_4, resp. (2/p)_4 (p/2)_4, is +1 at every split p = 1 (mod 4)
// dividing n.  Vacuously true when no such prime splits.
bool all_split_agree(const QuarticField& K) {
  for (const Int& p : K.shape.ones_split) {
    if (unit_symbol_at_split_p(K.k, p) != 1) return false;
  }
  return true;
}

bool any_split_differs(const QuarticField& K) {
  return K.shape.t2() > 0 && !all_split_agree(K);
}

// The single split p = 1 (mod 4); callers guarantee t2 == 1.
bool single_split_differs(const QuarticField& K) {
  return unit_symbol_at_split_p(K.k, K.shape.ones_split.front()) == -1;
}

bool two_adic_agree(const QuarticField& K) {
  return two_adic_unit_symbol(K.k) == 1;
}

}  // namespace

namespace detail {

ClosedForm closed_form_eval(const QuarticField& K) {
  const FactorizationShape& sh = K.shape;
  const int t = sh.t(), s = sh.s();
  const int t2 = sh.t2(), s1 = sh.s1(), s2 = sh.s2();
  const int h = sh.h();
  const int delta = sh.delta;

  if (K.k.l == 2) {
    if (t == 0 && s == 0) return {"L2/n1", 0};
    if (s == 0) {
      if (t2 == 0) return {"L2/pOnly/allInert", t};
      if (all_split_agree(K)) return {"L2/pOnly/agree", h};
      return {"L2/pOnly/differ", h - 1};
    }
    if (t == 0) {
      if (s2 == 0) return {"L2/qOnly/allInert", s - 1};
      return {"L2/qOnly/someSplit", s1 + 2 * s2 - 2};
    }
    if (s2 == 0) return {"L2/mixed/allInertQ", h + s - 1};
    return {"L2/mixed/someSplitQ", h + s1 + 2 * s2 - 2};
  }

  if (t == 0 && s == 0) {
    if (delta == 1) return {"L1/n1", 0};
    if (two_adic_agree(K)) return {"L1/n2/agree", 2};
    return {"L1/n2/differ", 1};
  }
  if (s == 0) {
    if (delta == 1) {
      if (t2 == 0) return {"L1/pOnly/allInert", t};
      if (all_split_agree(K)) return {"L1/pOnly/agree", h};
      return {"L1/pOnly/differ", h - 1};
    }
    if (two_adic_agree(K) && all_split_agree(K)) return {"L1/2pOnly/agree", h + 2};
    return {"L1/2pOnly/differ", h + 1};
  }
  if (t == 0) {
    if (s % 2 == 1) return {"L1/qOnly/sOdd", s1 + 2 * s2};
    if (s2 == 0) return {"L1/qOnly/sEven/allInert", s - 1 + 2 * (delta - 1)};
    return {"L1/qOnly/sEven/someSplit", s1 + 2 * s2 - 2 + 2 * (delta - 1)};
  }
  if (s % 2 == 1) return {"L1/mixed/sOdd", h + s1 + 2 * s2};
  if (s2 == 0) return {"L1/mixed/sEven/allInertQ", h + s - 1 + 2 * (delta - 1)};
  return {"L1/mixed/sEven/someSplitQ", h + s1 + 2 * s2 - 2 + 2 * (delta - 1)};
}

}  // namespace detail

namespace {

using Pred = std::function<bool(const QuarticField&)>;

ShapeDescriptor make_desc(std::string id, int rank, int delta, int num_p,
                          int num_q, std::string form, std::string conditions,
                          Pred pred) {
  ShapeDescriptor d;
  d.id = std::move(id);
  d.rank = rank;
  d.delta = delta;
  d.num_p = num_p;
  d.num_q = num_q;
  d.form = std::move(form);
  d.conditions = std::move(conditions);
  d.matches = std::move(pred);
  return d;
}

// ------------------------------------------------------------------------
// l = 1 (mod 8).  p, pi denote primes = 1 (mod 4), q, qi primes = 3 (mod 4),
// d the optional factor 2 of n.  "agree at p" abbreviates
// (p/l)_4 = (l/p)_4, "2-adic agree" abbreviates (2/l)_4 = (-1)^((l-1)/8).
// ------------------------------------------------------------------------
std::vector<ShapeDescriptor> shapes_l1(int rank) {
  std::vector<ShapeDescriptor> out;
  switch (rank) {
    case 0:
      out.push_back(make_desc("L1/r0/c1", 0, 1, 0, 0, "n = 1", "none",
                              [](const QuarticField&) { return true; }));
      break;
    case 1:
      out.push_back(make_desc(
          "L1/r1/c1", 1, 1, 1, 0, "n = p",
          "(p/l) = -1; or (p/l) = 1 and (p/l)_4 != (l/p)_4",
          [](const QuarticField& K) {
            return K.shape.t1() == 1 || single_split_differs(K);
          }));
      out.push_back(make_desc("L1/r1/c2", 1, 2, 0, 0, "n = 2",
                              "(2/l)_4 != (-1)^((l-1)/8)",
                              [](const QuarticField& K) {
                                return !two_adic_agree(K);
                              }));
      out.push_back(make_desc("L1/r1/c3", 1, 0, 0, 1, "n = d*q", "(q/l) = -1",
                              [](const QuarticField& K) {
                                return K.shape.s1() == 1;
                              }));
      out.push_back(make_desc("L1/r1/c4", 1, 1, 0, 2, "n = q1*q2",
                              "(q1/l) = -1 or (q2/l) = -1",
                              [](const QuarticField& K) {
                                return K.shape.s1() >= 1;
                              }));
      break;
    case 2:
      out.push_back(make_desc(
          "L1/r2/c1", 2, 1, 2, 0, "n = p1*p2",
          "(p1/l) = (p2/l) = -1; or (pi/l) = -(pj/l) = -1 and "
          "(pj/l)_4 != (l/pj)_4",
          [](const QuarticField& K) {
            if (K.shape.t1() == 2) return true;
            return K.shape.t1() == 1 && single_split_differs(K);
          }));
      out.push_back(make_desc("L1/r2/c2", 2, 1, 1, 0, "n = p",
                              "(p/l) = 1 and (p/l)_4 = (l/p)_4",
                              [](const QuarticField& K) {
                                return K.shape.t2() == 1 &&
                                       !single_split_differs(K);
                              }));
      out.push_back(make_desc("L1/r2/c3", 2, 2, 1, 0, "n = 2*p",
                              "(p/l) = -1 and (2/l)_4 != (-1)^((l-1)/8)",
                              [](const QuarticField& K) {
                                return K.shape.t1() == 1 && !two_adic_agree(K);
                              }));
      out.push_back(make_desc("L1/r2/c4", 2, 2, 0, 0, "n = 2",
                              "(2/l)_4 = (-1)^((l-1)/8)",
                              [](const QuarticField& K) {
                                return two_adic_agree(K);
                              }));
      out.push_back(make_desc("L1/r2/c5", 2, 0, 0, 1, "n = d*q", "(q/l) = 1",
                              [](const QuarticField& K) {
                                return K.shape.s2() == 1;
                              }));
      out.push_back(make_desc("L1/r2/c6", 2, 1, 0, 2, "n = q1*q2",
                              "(q1/l) = (q2/l) = 1",
                              [](const QuarticField& K) {
                                return K.shape.s2() == 2;
                              }));
      out.push_back(make_desc("L1/r2/c7", 2, 0, 1, 1, "n = d*p*q",
                              "(p/l) = (q/l) = -1",
                              [](const QuarticField& K) {
                                return K.shape.t1() == 1 && K.shape.s1() == 1;
                              }));
      out.push_back(make_desc("L1/r2/c8", 2, 1, 1, 2, "n = p*q1*q2",
                              "(p/l) = -1; (q1/l) = -1 or (q2/l) = -1",
                              [](const QuarticField& K) {
                                return K.shape.t1() == 1 && K.shape.s1() >= 1;
                              }));
      break;
    case 3:
      out.push_back(make_desc(
          "L1/r3/c1", 3, 2, 1, 0, "n = 2*p",
          "(p/l) = -1 and (2/l)_4 = (-1)^((l-1)/8); or (p/l) = 1 and "
          "((2/l)_4 != (-1)^((l-1)/8) or (p/l)_4 != (l/p)_4)",
          [](const QuarticField& K) {
            if (K.shape.t1() == 1) return two_adic_agree(K);
            return !two_adic_agree(K) || single_split_differs(K);
          }));
      out.push_back(make_desc(
          "L1/r3/c2", 3, 1, 2, 0, "n = p1*p2",
          "(p1/l) = (p2/l) = 1 and (pi/l)_4 != (l/pi)_4 for some i; or "
          "(p1/l) = -(p2/l) = -1 and (p2/l)_4 = (l/p2)_4",
          [](const QuarticField& K) {
            if (K.shape.t2() == 2) return any_split_differs(K);
            return K.shape.t2() == 1 && !single_split_differs(K);
          }));
      out.push_back(make_desc("L1/r3/c3", 3, 2, 2, 0, "n = 2*p1*p2",
                              "(p1/l) = (p2/l) = -1 and "
                              "(2/l)_4 != (-1)^((l-1)/8)",
                              [](const QuarticField& K) {
                                return K.shape.t1() == 2 && !two_adic_agree(K);
                              }));
      out.push_back(make_desc(
          "L1/r3/c4", 3, 1, 3, 0, "n = p1*p2*p3",
          "(pi/l) = -1 for all i; or (p1/l) = (p2/l) = -(p3/l) = -1 and "
          "(p3/l)_4 != (l/p3)_4",
          [](const QuarticField& K) {
            if (K.shape.t1() == 3) return true;
            return K.shape.t1() == 2 && single_split_differs(K);
          }));
      out.push_back(make_desc("L1/r3/c5", 3, 0, 0, 3, "n = d*q1*q2*q3",
                              "(qi/l) = -1 for all i",
                              [](const QuarticField& K) {
                                return K.shape.s1() == 3;
                              }));
      out.push_back(make_desc("L1/r3/c6", 3, 1, 0, 4, "n = q1*q2*q3*q4",
                              "at most one (qi/l) = 1",
                              [](const QuarticField& K) {
                                return K.shape.s2() <= 1;
                              }));
      out.push_back(make_desc("L1/r3/c7", 3, 2, 0, 2, "n = 2*q1*q2",
                              "(q1/l) = -1 or (q2/l) = -1",
                              [](const QuarticField& K) {
                                return K.shape.s1() >= 1;
                              }));
      out.push_back(make_desc("L1/r3/c8", 3, 0, 2, 1, "n = d*p1*p2*q",
                              "(p1/l) = (p2/l) = (q/l) = -1",
                              [](const QuarticField& K) {
                                return K.shape.t1() == 2 && K.shape.s1() == 1;
                              }));
      out.push_back(make_desc("L1/r3/c9", 3, 0, 1, 1, "n = d*p*q",
                              "(p/l) != (q/l)",
                              [](const QuarticField& K) {
                                return (K.shape.t1() == 1) ==
                                       (K.shape.s2() == 1);
                              }));
      out.push_back(make_desc("L1/r3/c10", 3, 1, 2, 2, "n = p1*p2*q1*q2",
                              "(p1/l) = (p2/l) = -1 and at most one "
                              "(qi/l) = 1",
                              [](const QuarticField& K) {
                                return K.shape.t1() == 2 && K.shape.s2() <= 1;
                              }));
      out.push_back(make_desc(
          "L1/r3/c11", 3, 1, 1, 2, "n = p*q1*q2",
          "(p/l) = 1 and at most one (qi/l) = 1; or (p/l) = -1 and "
          "(q1/l) = (q2/l) = 1",
          [](const QuarticField& K) {
            if (K.shape.t2() == 1) return K.shape.s2() <= 1;
            return K.shape.s2() == 2;
          }));
      break;
    default:
      break;
  }
  return out;
}

// ------------------------------------------------------------------------
// l = 2.  n is odd; "agree at p" abbreviates (2/p)_4 = (p/2)_4.
// ------------------------------------------------------------------------
std::vector<ShapeDescriptor> shapes_l2(int rank) {
  std::vector<ShapeDescriptor> out;
  switch (rank) {
    case 0:
      out.push_back(make_desc("L2/r0/c1", 0, 1, 0, 0, "n = 1", "none",
                              [](const QuarticField&) { return true; }));
      out.push_back(make_desc("L2/r0/c2", 0, 1, 0, 1, "n = q", "none",
                              [](const QuarticField&) { return true; }));
      break;
    case 1:
      out.push_back(make_desc(
          "L2/r1/c1", 1, 1, 1, 0, "n = p",
          "(2/p) = -1; or (2/p) = 1 and (2/p)_4 != (p/2)_4",
          [](const QuarticField& K) {
            return K.shape.t1() == 1 || single_split_differs(K);
          }));
      out.push_back(make_desc("L2/r1/c2", 1, 1, 0, 2, "n = q1*q2",
                              "(2/q1) = -1 or (2/q2) = -1",
                              [](const QuarticField& K) {
                                return K.shape.s1() >= 1;
                              }));
      out.push_back(make_desc("L2/r1/c3", 1, 1, 1, 1, "n = p*q", "(2/p) = -1",
                              [](const QuarticField& K) {
                                return K.shape.t1() == 1;
                              }));
      break;
    case 2:
      out.push_back(make_desc("L2/r2/c1", 2, 1, 1, 0, "n = p",
                              "(2/p) = 1 and (2/p)_4 = (p/2)_4",
                              [](const QuarticField& K) {
                                return K.shape.t2() == 1 &&
                                       !single_split_differs(K);
                              }));
      out.push_back(make_desc(
          "L2/r2/c2", 2, 1, 2, 0, "n = p1*p2",
          "(2/p1) = (2/p2) = -1; or (2/pi) = -(2/pj) = -1 and "
          "(2/pj)_4 != (pj/2)_4",
          [](const QuarticField& K) {
            if (K.shape.t1() == 2) return true;
            return K.shape.t1() == 1 && single_split_differs(K);
          }));
      out.push_back(make_desc("L2/r2/c3", 2, 1, 0, 2, "n = q1*q2",
                              "(2/q1) = (2/q2) = 1",
                              [](const QuarticField& K) {
                                return K.shape.s2() == 2;
                              }));
      out.push_back(make_desc("L2/r2/c4", 2, 1, 0, 3, "n = q1*q2*q3",
                              "at most one (2/qi) = 1",
                              [](const QuarticField& K) {
                                return K.shape.s2() <= 1;
                              }));
      out.push_back(make_desc("L2/r2/c5", 2, 1, 2, 1, "n = p1*p2*q",
                              "(2/p1) = (2/p2) = -1",
                              [](const QuarticField& K) {
                                return K.shape.t1() == 2;
                              }));
      out.push_back(make_desc("L2/r2/c6", 2, 1, 1, 1, "n = p*q", "(2/p) = 1",
                              [](const QuarticField& K) {
                                return K.shape.t2() == 1;
                              }));
      out.push_back(make_desc("L2/r2/c7", 2, 1, 1, 2, "n = p*q1*q2",
                              "(2/p) = -1; (2/q1) = -1 or (2/q2) = -1",
                              [](const QuarticField& K) {
                                return K.shape.t1() == 1 && K.shape.s1() >= 1;
                              }));
      break;
    case 3:
      out.push_back(make_desc(
          "L2/r3/c1", 3, 1, 2, 0, "n = p1*p2",
          "(2/p1) = (2/p2) = 1 and (2/pi)_4 != (pi/2)_4 for some i; or "
          "(2/pi) = -(2/pj) = -1 and (2/pj)_4 = (pj/2)_4",
          [](const QuarticField& K) {
            if (K.shape.t2() == 2) return any_split_differs(K);
            return K.shape.t2() == 1 && !single_split_differs(K);
          }));
      out.push_back(make_desc(
          "L2/r3/c2", 3, 1, 3, 0, "n = p1*p2*p3",
          "(2/pi) = -1 for all i; or exactly one (2/pk) = 1 with "
          "(2/pk)_4 != (pk/2)_4",
          [](const QuarticField& K) {
            if (K.shape.t1() == 3) return true;
            return K.shape.t1() == 2 && single_split_differs(K);
          }));
      out.push_back(make_desc("L2/r3/c3", 3, 1, 0, 3, "n = q1*q2*q3",
                              "exactly one (2/qi) = -1",
                              [](const QuarticField& K) {
                                return K.shape.s1() == 1;
                              }));
      out.push_back(make_desc("L2/r3/c4", 3, 1, 0, 4, "n = q1*q2*q3*q4",
                              "at most one (2/qi) = 1",
                              [](const QuarticField& K) {
                                return K.shape.s2() <= 1;
                              }));
      out.push_back(make_desc("L2/r3/c5", 3, 1, 3, 1, "n = p1*p2*p3*q",
                              "(2/pi) = -1 for all i",
                              [](const QuarticField& K) {
                                return K.shape.t1() == 3;
                              }));
      out.push_back(make_desc("L2/r3/c6", 3, 1, 1, 3, "n = p*q1*q2*q3",
                              "(2/p) = -1 and at most one (2/qi) = 1",
                              [](const QuarticField& K) {
                                return K.shape.t1() == 1 && K.shape.s2() <= 1;
                              }));
      out.push_back(make_desc("L2/r3/c7", 3, 1, 2, 2, "n = p1*p2*q1*q2",
                              "(2/p1) = (2/p2) = -1; (2/q1) = -1 or "
                              "(2/q2) = -1",
                              [](const QuarticField& K) {
                                return K.shape.t1() == 2 && K.shape.s1() >= 1;
                              }));
      out.push_back(make_desc(
          "L2/r3/c8", 3, 1, 1, 2, "n = p*q1*q2",
          "(2/p) = 1 and ((2/q1) = -1 or (2/q2) = -1); or (2/p) = -1 and "
          "(2/q1) = (2/q2) = 1",
          [](const QuarticField& K) {
            if (K.shape.t2() == 1) return K.shape.s1() >= 1;
            return K.shape.s2() == 2;
          }));
      out.push_back(make_desc("L2/r3/c9", 3, 1, 2, 1, "n = p1*p2*q",
                              "(2/p1) != (2/p2)",
                              [](const QuarticField& K) {
                                return K.shape.t1() == 1;
                              }));
      break;
    default:
      break;
  }
  return out;
}

}  // namespace

std::vector<ShapeDescriptor> classify_shapes(const BaseField& k,
                                             int target_rank) {
  if (target_rank < 0 || target_rank > 3) {
    throw input_error(errc::bad_argument,
                      "classification is enumerated for ranks 0..3, got " +
                          std::to_string(target_rank));
  }
  return k.l == 2 ? shapes_l2(target_rank) : shapes_l1(target_rank);
}

bool match_shape(const QuarticField& K, const ShapeDescriptor& d) {
  if (d.delta != 0 && K.shape.delta != d.delta) return false;
  if (K.shape.t() != d.num_p || K.shape.s() != d.num_q) return false;
  return d.matches(K);
}

bool match_shape(const Int& n, const BaseField& k, const ShapeDescriptor& d) {
  return match_shape(make_quarticfield(n, k), d);
}

}  // namespace q4rank
