#include "sptq/gen_fns.hpp"

#include <stdexcept>

namespace sptq {

SBFamily sb_family_from_name(const std::string& name) {
  if (name == "NSB") return SBFamily::SB;
  if (name == "NSB1") return SBFamily::SB1;
  if (name == "NSB2") return SBFamily::SB2;
  if (name == "NS2B") return SBFamily::S2B;
  throw std::invalid_argument("unknown spt-crank family: " + name);
}

namespace {

struct SptShape {
  Parity smallest = Parity::any;
  int step = 1;        // base of the Pochhammer tails
  int den_shift = 1;   // denominator tail starts at q^{s+den_shift}
  bool overline = true;  // numerator tail (-q^{s+1}; q^step)_inf present
};

SptShape spt_shape(SptVariant v) {
  switch (v) {
    case SptVariant::spt:
      return {Parity::any, 1, 1, false};
    case SptVariant::sptbar:
      return {Parity::any, 1, 1, true};
    case SptVariant::sptbar1:
      return {Parity::odd, 1, 1, true};
    case SptVariant::sptbar2:
      return {Parity::even, 1, 1, true};
    case SptVariant::m2spt:
      return {Parity::even, 2, 2, true};
  }
  throw std::logic_error("unreachable");
}

}  // namespace

QSeries spt_gf(SptVariant v, int trunc) {
  SptShape sh = spt_shape(v);
  QSeries acc(1, trunc);
  for (int s = 1; s <= trunc; ++s) {
    if (!parity_ok(s, sh.smallest)) continue;
    QSeries term = poch_inf_inv(1, 1, s + sh.den_shift, sh.step, trunc);
    if (sh.overline) term = term * poch_inf(1, -1, s + 1, sh.step, trunc);
    term.mul_qpow(s);
    term.div_one_minus(CycInt(1, 1), s);
    term.div_one_minus(CycInt(1, 1), s);
    acc += term;
  }
  return acc;
}

namespace {

struct SBShape {
  Parity smallest;
  int step;       // base q or q^2
  int num_shift;  // (q^{s+num_shift}; q^step)_inf
  int ov_shift;   // (-q^{s+ov_shift}; q^step)_inf
};

SBShape sb_shape(SBFamily f) {
  switch (f) {
    case SBFamily::SB:
      return {Parity::any, 1, 1, 1};
    case SBFamily::SB1:
      return {Parity::odd, 1, 1, 1};
    case SBFamily::SB2:
      return {Parity::even, 1, 1, 1};
    case SBFamily::S2B:
      return {Parity::even, 2, 2, 1};
  }
  throw std::logic_error("unreachable");
}

}  // namespace

ZLaurentSeries sbar_series(SBFamily f, int trunc) {
  SBShape sh = sb_shape(f);
  ZLaurentSeries acc(trunc);
  for (int s = 1; s <= trunc; ++s) {
    if (!parity_ok(s, sh.smallest)) continue;
    QSeries num = poch_inf(1, 1, s + sh.num_shift, sh.step, trunc) *
                  poch_inf(1, -1, s + sh.ov_shift, sh.step, trunc);
    ZLaurentSeries term = ZLaurentSeries::one(trunc);
    term.mul_int_series(num);
    term.mul_qpow(s);
    for (int e = s; e <= trunc; e += sh.step) {
      term.div_one_minus_zq(1, e);
      term.div_one_minus_zq(-1, e);
    }
    acc += term;
  }
  acc.assert_support_bound();
  return acc;
}

QSeries sbar_at_root(SBFamily f, int t, int trunc) {
  SBShape sh = sb_shape(f);
  CycInt z = CycInt::zeta_pow(t, 1), zi = CycInt::zeta_pow(t, -1);
  QSeries acc(t, trunc);
  for (int s = 1; s <= trunc; ++s) {
    if (!parity_ok(s, sh.smallest)) continue;
    QSeries term = (poch_inf(1, 1, s + sh.num_shift, sh.step, trunc) *
                    poch_inf(1, -1, s + sh.ov_shift, sh.step, trunc))
                       .promote(t);
    term.mul_qpow(s);
    for (int e = s; e <= trunc; e += sh.step) {
      term.div_one_minus(z, e);
      term.div_one_minus(zi, e);
    }
    acc += term;
  }
  return acc;
}

ZLaurentSeries stat_series(StatFamily f, int trunc) {
  ZLaurentSeries acc(trunc);
  switch (f) {
    case StatFamily::Nbar:
      for (long n = 0; n * (n + 1) / 2 <= trunc; ++n) {
        // (-1;q)_n q^{n(n+1)/2} / ((zq;q)_n (z^{-1}q;q)_n)
        QSeries pref = QSeries::one(1, trunc);
        if (n >= 1) pref.mul_int(Int(2));
        for (long k = 1; k < n; ++k) pref.mul_one_minus(CycInt(1, -1), int(k));
        ZLaurentSeries term = ZLaurentSeries::one(trunc);
        term.mul_int_series(pref);
        term.mul_qpow(int(n * (n + 1) / 2));
        for (long j = 1; j <= n; ++j) {
          term.div_one_minus_zq(1, int(j));
          term.div_one_minus_zq(-1, int(j));
        }
        acc += term;
      }
      break;
    case StatFamily::N2:
      for (long n = 0; n * n <= trunc; ++n) {
        QSeries pref = QSeries::one(1, trunc);  // (-q;q^2)_n
        for (long k = 0; k < n; ++k) pref.mul_one_minus(CycInt(1, -1), int(2 * k + 1));
        ZLaurentSeries term = ZLaurentSeries::one(trunc);
        term.mul_int_series(pref);
        term.mul_qpow(int(n * n));
        for (long j = 1; j <= n; ++j) {
          term.div_one_minus_zq(1, int(2 * j));
          term.div_one_minus_zq(-1, int(2 * j));
        }
        acc += term;
      }
      break;
    case StatFamily::N:
      for (long n = 0; n * n <= trunc; ++n) {
        ZLaurentSeries term = ZLaurentSeries::one(trunc);
        term.mul_qpow(int(n * n));
        for (long j = 1; j <= n; ++j) {
          term.div_one_minus_zq(1, int(j));
          term.div_one_minus_zq(-1, int(j));
        }
        acc += term;
      }
      break;
    case StatFamily::Mbar:
      acc = ZLaurentSeries::one(trunc);
      acc.mul_int_series(poch_inf(1, -1, 1, 1, trunc) * poch_inf(1, 1, 1, 1, trunc));
      for (int j = 1; j <= trunc; ++j) {
        acc.div_one_minus_zq(1, j);
        acc.div_one_minus_zq(-1, j);
      }
      break;
    case StatFamily::M2:
      acc = ZLaurentSeries::one(trunc);
      acc.mul_int_series(poch_inf(1, -1, 1, 2, trunc) * poch_inf(1, 1, 2, 2, trunc));
      for (int j = 2; j <= trunc; j += 2) {
        acc.div_one_minus_zq(1, j);
        acc.div_one_minus_zq(-1, j);
      }
      break;
    case StatFamily::M:
      acc = ZLaurentSeries::one(trunc);
      acc.mul_int_series(poch_inf(1, 1, 1, 1, trunc));
      for (int j = 1; j <= trunc; ++j) {
        acc.div_one_minus_zq(1, j);
        acc.div_one_minus_zq(-1, j);
      }
      break;
  }
  acc.assert_support_bound();
  return acc;
}

ZLaurentSeries epsilon_series(int trunc) {
  // 2*E(z,q) = (-q;q)/(q;q) * (1 + 2*sum (1-z)(1-z^{-1})(-1)^n q^n / poles)
  ZLaurentSeries acc(trunc);
  acc.add_coeff(0, 0, Int(1));
  for (int n = 1; n <= trunc; ++n) {
    ZLaurentSeries term(trunc);
    Int s(n % 2 ? -2 : 2);
    term.add_coeff(0, n, 2 * s);
    term.add_coeff(1, n, -s);
    term.add_coeff(-1, n, -s);
    term.div_one_minus_zq(1, n);
    term.div_one_minus_zq(-1, n);
    acc += term;
  }
  acc.mul_int_series(poch_inf(1, -1, 1, 1, trunc) * poch_inf_inv(1, 1, 1, 1, trunc));
  acc.assert_support_bound();
  return acc;
}

TwoVarTable stat_table(StatFamily f, int max_n) {
  const char* names[] = {"Nbar", "Mbar", "N2", "M2", "N", "M"};
  return TwoVarTable::from_laurent(names[int(f)], stat_series(f, max_n));
}

TwoVarTable nsb_table_series(SBFamily f, int max_n) {
  const char* names[] = {"NSB", "NSB1", "NSB2", "NS2B"};
  return TwoVarTable::from_laurent(names[int(f)], sbar_series(f, max_n));
}

namespace {

QSeries prefactor_at_root(int t, int trunc, bool m2) {
  QSeries p = m2 ? poch_inf(1, -1, 1, 2, trunc) * poch_inf_inv(1, 1, 2, 2, trunc)
                 : poch_inf(1, -1, 1, 1, trunc) * poch_inf_inv(1, 1, 1, 1, trunc);
  return p.promote(t);
}

}  // namespace

QSeries nbar_lambert_at_root(int t, int trunc) {
  LambertSpec spec;
  spec.a = [](long n) { return n * n + n; };
  spec.g = [](long n) { return n; };
  spec.sign = [](long n) { return n % 2 ? -1 : 1; };
  QSeries sum = lambert_sum(t, 1, spec, trunc);
  sum.mul_int(Int(2));
  sum += QSeries::one(t, trunc);
  return prefactor_at_root(t, trunc, false) * sum;
}

QSeries n2_lambert_at_root(int t, int trunc) {
  LambertSpec spec;
  spec.a = [](long n) { return 2 * n * n + n; };
  spec.g = [](long n) { return 2 * n; };
  spec.sign = [](long n) { return n % 2 ? -1 : 1; };
  spec.extra_h = [](long n) { return 2 * n; };
  spec.has_extra = true;
  QSeries sum = lambert_sum(t, 1, spec, trunc);
  sum += QSeries::one(t, trunc);
  return prefactor_at_root(t, trunc, true) * sum;
}

QSeries epsilon_at_root(int t, int trunc) {
  LambertSpec spec;
  spec.a = [](long n) { return n; };
  spec.g = [](long n) { return n; };
  spec.sign = [](long n) { return n % 2 ? -1 : 1; };
  QSeries sum = lambert_sum(t, 1, spec, trunc);
  sum.mul_int(Int(2));
  sum += QSeries::one(t, trunc);
  return prefactor_at_root(t, trunc, false) * sum;
}

QSeries nbar_eulerian_at_root(int t, int trunc) {
  CycInt z = CycInt::zeta_pow(t, 1), zi = CycInt::zeta_pow(t, -1);
  QSeries acc(t, trunc);
  for (long n = 0; n * (n + 1) / 2 <= trunc; ++n) {
    QSeries pref = QSeries::one(1, trunc);
    if (n >= 1) pref.mul_int(Int(2));
    for (long k = 1; k < n; ++k) pref.mul_one_minus(CycInt(1, -1), int(k));
    QSeries term = pref.promote(t);
    term.mul_qpow(int(n * (n + 1) / 2));
    for (long j = 1; j <= n; ++j) {
      term.div_one_minus(z, int(j));
      term.div_one_minus(zi, int(j));
    }
    acc += term;
  }
  return acc;
}

QSeries n2_eulerian_at_root(int t, int trunc) {
  CycInt z = CycInt::zeta_pow(t, 1), zi = CycInt::zeta_pow(t, -1);
  QSeries acc(t, trunc);
  for (long n = 0; n * n <= trunc; ++n) {
    QSeries pref = QSeries::one(1, trunc);
    for (long k = 0; k < n; ++k) pref.mul_one_minus(CycInt(1, -1), int(2 * k + 1));
    QSeries term = pref.promote(t);
    term.mul_qpow(int(n * n));
    for (long j = 1; j <= n; ++j) {
      term.div_one_minus(z, int(2 * j));
      term.div_one_minus(zi, int(2 * j));
    }
    acc += term;
  }
  return acc;
}

QSeries mbar_at_root(int t, int trunc) {
  CycInt z = CycInt::zeta_pow(t, 1), zi = CycInt::zeta_pow(t, -1);
  QSeries r = (poch_inf(1, -1, 1, 1, trunc) * poch_inf(1, 1, 1, 1, trunc)).promote(t);
  for (int j = 1; j <= trunc; ++j) {
    r.div_one_minus(z, j);
    r.div_one_minus(zi, j);
  }
  return r;
}

QSeries m2crank_at_root(int t, int trunc) {
  CycInt z = CycInt::zeta_pow(t, 1), zi = CycInt::zeta_pow(t, -1);
  QSeries r = (poch_inf(1, -1, 1, 2, trunc) * poch_inf(1, 1, 2, 2, trunc)).promote(t);
  for (int j = 2; j <= trunc; j += 2) {
    r.div_one_minus(z, j);
    r.div_one_minus(zi, j);
  }
  return r;
}

int dissection_modulus(int theorem) {
  switch (theorem) {
    case 5: case 7: case 9: case 11: case 13:
      return 3;
    case 6: case 8: case 10: case 12: case 14:
      return 5;
  }
  throw std::invalid_argument("dissection_modulus: theorem out of range");
}

QSeries dissection_left_side(int theorem, int overall_trunc) {
  int t = dissection_modulus(theorem);
  switch (theorem) {
    case 5: case 6:
      return nbar_lambert_at_root(t, overall_trunc);
    case 7: case 8:
      return n2_lambert_at_root(t, overall_trunc);
    case 9: case 10:
      return mbar_at_root(t, overall_trunc);
    case 11: case 12:
      return m2crank_at_root(t, overall_trunc);
    case 13: case 14:
      return epsilon_at_root(t, overall_trunc);
  }
  throw std::invalid_argument("dissection_left_side: theorem out of range");
}

namespace {

// (c*q^a; q^b)_inf^{-e} with c = +1 (plain) or -1 (negated argument): e counts
// copies of the factor in the DENOMINATOR (the common case in these
// eta-quotient-shaped components); negative e puts |e| copies in the numerator.
struct PF {
  int c, a, b, e;
};
struct PTerm {
  CycInt scalar;
  int qshift = 0;
  std::vector<PF> fs;
};

QSeries build_terms(int t, const std::vector<PTerm>& terms, int trunc) {
  QSeries acc(t, trunc);
  for (const PTerm& term : terms) {
    QSeries r = QSeries::one(t, trunc);
    for (const PF& f : term.fs) {
      CycInt c(t, f.c);
      for (int rep = 0; rep < std::abs(f.e); ++rep)
        for (int e = f.a; e <= trunc; e += f.b)
          f.e < 0 ? r.mul_one_minus(c, e) : r.div_one_minus(c, e);
    }
    r.mul_qpow(term.qshift);
    r.mul_scalar(term.scalar);
    acc += r;
  }
  return acc;
}

CycInt zsum(int t, std::initializer_list<long> exps, long scale = 1, long constant = 0) {
  CycInt acc(t, constant);
  for (long e : exps) acc += CycInt::zeta_pow(t, e);
  acc *= Int(scale);
  return acc;
}

}  // namespace

std::map<int, QSeries> dissection_components(int theorem, int trunc) {
  const int N = trunc;
  std::map<int, QSeries> out;
  auto one3 = CycInt(3, 1);
  switch (theorem) {
    case 5:  // Dyson rank at zeta_3
      out[0] = build_terms(3, {{one3, 0, {{1, 3, 3, -4}, {1, 2, 2, -1}, {1, 1, 1, 2}, {1, 6, 6, 2}}}}, N);
      out[1] = build_terms(3, {{CycInt(3, 2), 0, {{1, 3, 3, -1}, {1, 6, 6, -1}, {1, 1, 1, 1}}}}, N);
      break;
    case 6: {  // Dyson rank at zeta_5
      CycInt twoc = zsum(5, {1, -1}, 2);            // 2(zeta+zeta^{-1})
      CycInt twod = zsum(5, {1, -1}, -2) + CycInt(5, 2);  // 2(1-zeta-zeta^{-1})
      out[0] = build_terms(
          5,
          {{CycInt(5, 1), 0,
            {{1, 4, 10, -1}, {1, 6, 10, -1}, {1, 5, 5, -2}, {1, 2, 5, 2}, {1, 3, 5, 2}, {1, 10, 10, 1}}},
           {twoc, 1, {{1, 10, 10, -1}, {1, 3, 10, 1}, {1, 4, 10, 1}, {1, 6, 10, 1}, {1, 7, 10, 1}}}},
          N);
      out[3] = build_terms(5, {{twod, 0, {{1, 10, 10, -1}, {1, 2, 5, 1}, {1, 3, 5, 1}}}}, N);
      break;
    }
    case 7:  // M2-rank at zeta_3
      out[1] = build_terms(3, {{one3, 0, {{1, 6, 6, -4}, {1, 2, 2, 1}, {1, 3, 3, 1}, {1, 12, 12, 1}}}}, N);
      break;
    case 8: {  // M2-rank at zeta_5
      CycInt c = zsum(5, {1, 4});
      out[1] = build_terms(5, {{CycInt(5, 1), 0, {{-1, 5, 10, -1}, {1, 10, 10, -1}, {1, 2, 10, 1}, {1, 8, 10, 1}}}}, N);
      out[3] = build_terms(5, {{c, 0, {{-1, 5, 10, -1}, {1, 10, 10, -1}, {1, 4, 10, 1}, {1, 6, 10, 1}}}}, N);
      break;
    }
    case 9:  // residual crank at zeta_3
      out[0] = build_terms(3, {{one3, 0, {{1, 3, 3, -4}, {1, 2, 2, -1}, {1, 1, 1, 2}, {1, 6, 6, 2}}}}, N);
      out[1] = build_terms(3, {{CycInt(3, -1), 0, {{1, 6, 6, -1}, {1, 3, 3, -1}, {1, 1, 1, 1}}}}, N);
      out[2] = build_terms(3, {{CycInt(3, -2), 0, {{1, 6, 6, -4}, {1, 3, 3, 2}, {1, 2, 2, 1}}}}, N);
      break;
    case 10: {  // residual crank at zeta_5
      CycInt c = zsum(5, {1, 4});
      out[0] = build_terms(
          5,
          {{CycInt(5, 1), 0,
            {{1, 4, 10, -1}, {1, 6, 10, -1}, {1, 10, 10, -1}, {1, 1, 5, 1}, {1, 4, 5, 1}, {1, 2, 10, 1}, {1, 8, 10, 1}}},
           {-c, 1,
            {{1, 2, 10, -1}, {1, 8, 10, -1}, {1, 10, 10, -1}, {1, 2, 5, 1}, {1, 3, 5, 1}, {1, 4, 10, 1}, {1, 6, 10, 1}}}},
          N);
      out[1] = build_terms(
          5,
          {{c, 0,
            {{1, 4, 10, -1}, {1, 6, 10, -1}, {1, 10, 10, -1}, {1, 2, 5, 1}, {1, 3, 5, 1}, {1, 2, 10, 1}, {1, 8, 10, 1}}}},
          N);
      out[2] = build_terms(5, {{CycInt(5, -1), 0, {{1, 10, 10, -1}, {1, 1, 5, 1}, {1, 4, 5, 1}}}}, N);
      out[3] = build_terms(5, {{-c, 0, {{1, 10, 10, -1}, {1, 2, 5, 1}, {1, 3, 5, 1}}}}, N);
      out[4] = build_terms(
          5,
          {{CycInt(5, -1), 0,
            {{1, 2, 10, -1}, {1, 8, 10, -1}, {1, 10, 10, -1}, {1, 1, 5, 1}, {1, 4, 5, 1}, {1, 4, 10, 1}, {1, 6, 10, 1}}}},
          N);
      break;
    }
    case 11:  // M2 crank at zeta_3
      out[0] = build_terms(
          3, {{one3, 0, {{1, 6, 6, -10}, {1, 4, 4, -1}, {1, 1, 1, -1}, {1, 12, 12, 4}, {1, 3, 3, 4}, {1, 2, 2, 3}}}},
          N);
      out[1] = build_terms(3, {{one3, 0, {{1, 6, 6, -4}, {1, 12, 12, 1}, {1, 3, 3, 1}, {1, 2, 2, 1}}}}, N);
      out[2] = build_terms(
          3, {{CycInt(3, -2), 0, {{1, 12, 12, -2}, {1, 3, 3, -2}, {1, 2, 2, -1}, {1, 6, 6, 2}, {1, 4, 4, 1}, {1, 1, 1, 1}}}},
          N);
      break;
    case 12: {  // M2 crank at zeta_5
      CycInt c = zsum(5, {1, 4});
      out[0] = build_terms(
          5,
          {{CycInt(5, 1), 0,
            {{-1, 3, 10, -1}, {-1, 5, 10, -1}, {-1, 7, 10, -1}, {1, 10, 10, -1},
             {-1, 1, 10, 1}, {1, 4, 10, 1}, {1, 6, 10, 1}, {-1, 9, 10, 1}}}},
          N);
      out[1] = build_terms(5, {{CycInt(5, 1), 0, {{-1, 5, 10, -1}, {1, 10, 10, -1}, {1, 2, 10, 1}, {1, 8, 10, 1}}}}, N);
      out[2] = build_terms(
          5,
          {{c, 0,
            {{1, 2, 10, -1}, {-1, 3, 10, -1}, {-1, 5, 10, -1}, {-1, 7, 10, -1}, {1, 8, 10, -1}, {1, 10, 10, -1},
             {-1, 1, 10, 1}, {1, 4, 10, 2}, {1, 6, 10, 2}, {-1, 9, 10, 1}}},
           {CycInt(5, -1), 0,
            {{-1, 1, 10, -1}, {1, 4, 10, -1}, {-1, 5, 10, -1}, {1, 6, 10, -1}, {-1, 9, 10, -1}, {1, 10, 10, -1},
             {1, 2, 10, 2}, {-1, 3, 10, 1}, {-1, 7, 10, 1}, {1, 8, 10, 2}}}},
          N);
      out[3] = build_terms(5, {{c, 0, {{-1, 5, 10, -1}, {1, 10, 10, -1}, {1, 4, 10, 1}, {1, 6, 10, 1}}}}, N);
      out[4] = build_terms(
          5,
          {{-c, 0,
            {{-1, 1, 10, -1}, {-1, 5, 10, -1}, {-1, 9, 10, -1}, {1, 10, 10, -1},
             {1, 2, 10, 1}, {-1, 3, 10, 1}, {-1, 7, 10, 1}, {1, 8, 10, 1}}}},
          N);
      break;
    }
    case 13:  // doubled extra series at zeta_3: 2A_0, 2A_1, 2A_2
      out[0] = build_terms(3, {{one3, 0, {{1, 3, 3, -4}, {1, 2, 2, -1}, {1, 1, 1, 2}, {1, 6, 6, 2}}}}, N);
      out[1] = build_terms(3, {{CycInt(3, -4), 0, {{1, 6, 6, -1}, {1, 3, 3, -1}, {1, 1, 1, 1}}}}, N);
      out[2] = build_terms(3, {{CycInt(3, 4), 0, {{1, 6, 6, -4}, {1, 3, 3, 2}, {1, 2, 2, 1}}}}, N);
      break;
    case 14: {  // doubled extra series at zeta_5: 2B_0..2B_4
      CycInt twoc = zsum(5, {1, -1}, 2);                       // 2(zeta+zeta^{-1})
      CycInt b1 = zsum(5, {1, -1}, 2) + CycInt(5, -2);         // 2(zeta+zeta^{-1}-1)
      CycInt b2 = zsum(5, {1, -1}, -4) + CycInt(5, 2);         // 2(1-2zeta-2zeta^{-1})
      out[0] = build_terms(
          5,
          {{CycInt(5, 1), 0,
            {{1, 5, 5, -2}, {1, 4, 10, -1}, {1, 6, 10, -1}, {1, 10, 10, 1}, {1, 2, 5, 2}, {1, 3, 5, 2}}},
           {twoc, 1, {{1, 10, 10, -1}, {1, 3, 10, 1}, {1, 4, 10, 1}, {1, 6, 10, 1}, {1, 7, 10, 1}}}},
          N);
      out[1] = build_terms(
          5,
          {{b1, 0,
            {{1, 4, 10, -1}, {1, 6, 10, -1}, {1, 10, 10, -1}, {1, 2, 10, 2}, {1, 8, 10, 2}, {1, 3, 10, 1}, {1, 7, 10, 1}}}},
          N);
      out[2] = build_terms(
          5, {{b2, 0, {{1, 10, 10, -1}, {1, 1, 10, 1}, {1, 9, 10, 1}, {1, 4, 10, 1}, {1, 6, 10, 1}}}}, N);
      out[3] = build_terms(5, {{CycInt(5, -2), 0, {{1, 10, 10, -1}, {1, 2, 5, 1}, {1, 3, 5, 1}}}}, N);
      out[4] = build_terms(
          5,
          {{twoc, 0,
            {{1, 2, 10, -1}, {1, 8, 10, -1}, {1, 10, 10, -1}, {1, 1, 10, 1}, {1, 9, 10, 1}, {1, 4, 10, 2}, {1, 6, 10, 2}}}},
          N);
      break;
    }
    default:
      throw std::invalid_argument("dissection_components: theorem out of range");
  }
  return out;
}

QSeries nsb_zero_gf(int trunc) {
  QSeries sum(1, trunc);
  for (long n = 1; n * (n + 1) / 2 <= trunc; ++n) {
    QSeries term(1, trunc);
    term.add_coeff(int(n * (n + 1) / 2), CycInt(1, n % 2 ? 1 : -1));
    term.div_one_minus(CycInt(1, 1), int(n));
    sum += term;
  }
  for (long n = 1; n * n + n <= trunc; ++n) {
    QSeries term(1, trunc);
    term.add_coeff(int(n * n + n), CycInt(1, n % 2 ? -2 : 2));
    term.div_one_minus(CycInt(1, 1), int(2 * n));
    sum += term;
  }
  return poch_inf(1, -1, 1, 1, trunc) * poch_inf_inv(1, 1, 1, 1, trunc) * sum;
}

}  // namespace sptq
