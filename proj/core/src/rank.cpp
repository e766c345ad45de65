#include "q4rank/rank.hpp"

#include <stdexcept>

#include "closed_form.hpp"

namespace q4rank {
namespace {

Entry sign_entry(int s) { return s == 1 ? Entry::Plus : Entry::Minus; }

Entry entry_mul(Entry a, Entry b) {
  if (a == Entry::Unknown || b == Entry::Unknown) return Entry::Unknown;
  if (a == Entry::OppositePair || b == Entry::OppositePair) {
    // A pair of opposite signs scaled by a fixed sign is still opposite.
    // Two opposite pairs never meet: OppositePair occurs in the unit row
    // only.
    if (a == b) throw std::logic_error("symbol matrix: opposite-pair "
                                       "entries multiplied together");
    return Entry::OppositePair;
  }
  return (a == b) ? Entry::Plus : Entry::Minus;
}

enum class RowStatus { Norm, NotNorm };

// Any -1 makes the unit a non-norm; an OppositePair guarantees a -1 on one
// of its two columns regardless of labeling.  Unknowns are only reached
// when everything else is +1, and then nothing can be concluded: the
// product formula fixes only the product of the two equal 2-adic entries.
RowStatus row_status(const std::vector<Entry>& row) {
  bool unknown = false;
  for (Entry e : row) {
    if (e == Entry::Minus || e == Entry::OppositePair) return RowStatus::NotNorm;
    if (e == Entry::Unknown) unknown = true;
  }
  if (unknown) {
    throw std::logic_error("symbol matrix: a unit row is all +1 except for "
                           "undetermined 2-adic entries; the rule table "
                           "guarantees this cannot happen for valid fields");
  }
  return RowStatus::Norm;
}

}  // namespace

int unit_symbol_at_split_p(const BaseField& k, const Int& p) {
  if (k.l == 2) {
    // (2/p)_4 * (p/2)_4 with (p/2)_4 = (-1)^((p-1)/8); p = 1 (mod 8) since
    // p = 1 (mod 4) and 2 splits at p.
    return quartic_symbol(2, p) * eighth_character(p);
  }
  return quartic_symbol(p, k.l) * quartic_symbol(k.l, p);
}

int two_adic_unit_symbol(const BaseField& k) {
  return *k.two_quartic * *k.eighth;
}

std::vector<Entry> SymbolMatrix::row_minus_eps() const {
  std::vector<Entry> out;
  out.reserve(row_eps.size());
  for (std::size_t i = 0; i < row_eps.size(); ++i) {
    out.push_back(entry_mul(row_minus_one[i], row_eps[i]));
  }
  return out;
}

SymbolMatrix symbol_matrix(const QuarticField& K) {
  const BaseField& k = K.k;
  const int s = K.shape.s();
  SymbolMatrix m;
  auto push = [&m](const RamifiedPlace& place, Entry minus_one, Entry eps) {
    m.columns.push_back(place);
    m.row_minus_one.push_back(minus_one);
    m.row_eps.push_back(eps);
  };

  for (const RamifiedPlace& place : ramification_profile(K).places) {
    switch (place.kind) {
      case PlaceKind::SqrtL:
        // (-1, d) = (-1/l) = +1 and (eps0, d) = (v^2 l / u) = +1; for
        // l = 2, (eps0, d) = [1/sqrt(2)] = +1.
        push(place, Entry::Plus, Entry::Plus);
        break;
      case PlaceKind::TwoAdicPair: {
        // (-1, d) = (-1)^s: each q = 3 (mod 4) factor contributes -1 at
        // the 2-adic places, everything else +1.  The unit entry is pinned
        // only for even n, where d = 2 * (odd part = 1 mod 4) * eps0*sqrt(l).
        const Entry minus_one = sign_entry(s % 2 == 0 ? 1 : -1);
        const Entry eps = K.shape.delta == 2
                              ? sign_entry(two_adic_unit_symbol(k))
                              : Entry::Unknown;
        push(place, minus_one, eps);
        push(place, minus_one, eps);
        break;
      }
      case PlaceKind::InertPrime: {
        // [-1/P] = +1 over the degree-2 residue field; [eps0/P] = (-1/p).
        const Entry eps = sign_entry(place.p % 4 == 1 ? 1 : -1);
        push(place, Entry::Plus, eps);
        break;
      }
      case PlaceKind::SplitPair: {
        if (place.p % 4 == 1) {
          const Entry eps = sign_entry(unit_symbol_at_split_p(k, place.p));
          push(place, Entry::Plus, eps);
          push(place, Entry::Plus, eps);
        } else {
          // (-1, d) = (-1/q) = -1 on both conjugates; the unit symbols at
          // the two conjugates differ.
          push(place, Entry::Minus, Entry::OppositePair);
          push(place, Entry::Minus, Entry::OppositePair);
        }
        break;
      }
    }
  }
  return m;
}

int r_star(const SymbolMatrix& m) {
  int r = 0;
  if (row_status(m.row_minus_one) == RowStatus::Norm) ++r;
  if (row_status(m.row_eps) == RowStatus::Norm ||
      row_status(m.row_minus_eps()) == RowStatus::Norm) {
    ++r;
  }
  return r;
}

RankResult rank_generic(const QuarticField& K) {
  RankResult res;
  res.path = RankPath::Generic;
  res.mu = ramification_profile(K).mu;
  res.r_star = r_star(symbol_matrix(K));
  res.rank = res.mu + res.r_star - 3;
  if (res.rank < 0) {
    throw std::logic_error("negative 2-rank computed for n = " +
                           K.n.get_str() + ", l = " + K.k.l.get_str());
  }
  res.case_id = detail::closed_form_eval(K).case_id;
  return res;
}

RankResult rank_closed_form(const QuarticField& K) {
  const detail::ClosedForm cf = detail::closed_form_eval(K);
  RankResult res;
  res.path = RankPath::ClosedForm;
  res.mu = ramification_profile(K).mu;
  res.rank = cf.rank;
  res.case_id = cf.case_id;
  // r* is pinned by the formula rank = mu + r* - 3.
  res.r_star = res.rank - res.mu + 3;
  if (res.r_star < 0 || res.r_star > 2) {
    throw std::logic_error("closed-form rank inconsistent with mu for n = " +
                           K.n.get_str() + ", l = " + K.k.l.get_str());
  }
  return res;
}

}  // namespace q4rank
