#include "pi1/plus_subgroup.hpp"

namespace pi1 {

namespace {

void require_nonorientable(const SurfaceKind& kind) {
  if (!kind.valid() || kind.orientable)
    raise(Errc::invalid_kind, "needs a non-orientable kind, got " + to_string(kind));
}

}  // namespace

Word plus_generator_expansion(const SurfaceKind& kind, const GenSym& s) {
  require_nonorientable(kind);
  AlphabetRef base = Alphabet::nonorientable_base(kind.genus, kind.boundary);
  const int g = kind.genus;
  switch (s.family) {
    case Family::xpair:
      if (s.i < 1 || s.i > g || s.j < 1 || s.j > g)
        raise(Errc::invalid_symbol, to_string(s) + " out of range");
      return mul(single(base, sym(Family::x, s.i)), single(base, sym(Family::x, s.j)));
    case Family::yplus:
      if (s.i < 1 || s.i > kind.boundary - 1)
        raise(Errc::invalid_symbol, to_string(s) + " out of range");
      return single(base, sym(Family::y, s.i));
    case Family::zplus:
      if (s.i < 1 || s.i > kind.boundary - 1)
        raise(Errc::invalid_symbol, to_string(s) + " out of range");
      return conj(single(base, sym(Family::x, g)), single(base, sym(Family::y, s.i)));
    default:
      raise(Errc::invalid_symbol, to_string(s) + " is not a pi_plus generator");
  }
}

SymbolMap plus_to_base(const SurfaceKind& kind) {
  require_nonorientable(kind);
  SymbolMap m;
  m.target = Alphabet::nonorientable_base(kind.genus, kind.boundary);
  m.total = true;
  AlphabetRef plus = Alphabet::plus(kind.genus, kind.boundary);
  for (const GenSym& s : plus->symbols())
    m.images.emplace(s, plus_generator_expansion(kind, s));
  return m;
}

SymbolMap rs_to_base(const SurfaceKind& kind) {
  require_nonorientable(kind);
  AlphabetRef base = Alphabet::nonorientable_base(kind.genus, kind.boundary);
  const int g = kind.genus;
  SymbolMap m;
  m.target = base;
  m.total = true;
  AlphabetRef rs = Alphabet::reidemeister_schreier(g, kind.boundary);
  for (const GenSym& s : rs->symbols()) {
    switch (s.family) {
      case Family::u:
        m.images.emplace(
            s, mul(single(base, sym(Family::x, s.i)), single(base, sym(Family::x, g), -1)));
        break;
      case Family::v:
        m.images.emplace(s,
                         mul(single(base, sym(Family::x, g)), single(base, sym(Family::x, s.i))));
        break;
      default:
        m.images.emplace(s, plus_generator_expansion(kind, s));
    }
  }
  return m;
}

Word plus_pair_word(const SurfaceKind& kind, int i, int j) {
  require_nonorientable(kind);
  const int g = kind.genus;
  if (i < 1 || i > g || j < 1 || j > g)
    raise(Errc::index_out_of_range, "pair index out of range");
  AlphabetRef plus = Alphabet::plus(g, kind.boundary);
  if (i == j) return single(plus, sym(Family::xpair, i, i));
  if (i < j) {
    if (j == i + 1) return single(plus, sym(Family::xpair, i, j));
    return mul(mul(plus_pair_word(kind, i, j - 1),
                   single(plus, sym(Family::xpair, j - 1, j - 1), -1)),
               single(plus, sym(Family::xpair, j - 1, j)));
  }
  return mul(mul(single(plus, sym(Family::xpair, i, i)), inv(plus_pair_word(kind, j, i))),
             single(plus, sym(Family::xpair, j, j)));
}

Word plus_y_n(const SurfaceKind& kind) {
  require_nonorientable(kind);
  if (kind.boundary < 1) raise(Errc::requires_closed, "y_n needs n >= 1");
  AlphabetRef plus = Alphabet::plus(kind.genus, kind.boundary);
  Word w(plus);
  for (int j = 1; j <= kind.genus; ++j) w = mul(w, single(plus, sym(Family::xpair, j, j)));
  for (int l = 1; l <= kind.boundary - 1; ++l) w = mul(w, single(plus, sym(Family::yplus, l)));
  return inv(w);
}

Word plus_z_n(const SurfaceKind& kind) {
  require_nonorientable(kind);
  if (kind.boundary < 1) raise(Errc::requires_closed, "z_n needs n >= 1");
  AlphabetRef plus = Alphabet::plus(kind.genus, kind.boundary);
  Word w = plus_pair_word(kind, kind.genus, 1);
  for (int i = 1; i <= kind.genus - 1; ++i)
    w = mul(w, single(plus, sym(Family::xpair, i, i + 1)));
  for (int l = 1; l <= kind.boundary - 1; ++l) w = mul(w, single(plus, sym(Family::zplus, l)));
  return inv(w);
}

RSAlphabet rs_generators(const SurfaceKind& kind) {
  require_nonorientable(kind);
  RSAlphabet rs;
  rs.alphabet = Alphabet::reidemeister_schreier(kind.genus, kind.boundary);
  rs.to_base = rs_to_base(kind);
  return rs;
}

std::pair<Word, Word> rs_relators(const SurfaceKind& kind) {
  require_nonorientable(kind);
  if (!kind.closed()) raise(Errc::requires_closed, "RS relators exist only for n = 0");
  AlphabetRef rs = Alphabet::reidemeister_schreier(kind.genus, 0);
  const int g = kind.genus;
  Word r1(rs), r2(rs);
  for (int i = 1; i <= g - 1; ++i) {
    r1 = mul(mul(r1, single(rs, sym(Family::u, i))), single(rs, sym(Family::v, i)));
    r2 = mul(mul(r2, single(rs, sym(Family::v, i))), single(rs, sym(Family::u, i)));
  }
  r1 = mul(r1, single(rs, sym(Family::v, g)));
  r2 = mul(r2, single(rs, sym(Family::v, g)));
  return {r1, r2};
}

IsoPair iso_pair(const SurfaceKind& kind) {
  require_nonorientable(kind);
  const int g = kind.genus, n = kind.boundary;
  AlphabetRef plus = Alphabet::plus(g, n);
  AlphabetRef rs = Alphabet::reidemeister_schreier(g, n);
  IsoPair iso;
  iso.phi.target = rs;
  iso.phi.total = true;
  iso.psi.target = plus;
  iso.psi.total = true;
  for (int i = 1; i <= g - 1; ++i)
    iso.phi.images.emplace(sym(Family::xpair, i, i + 1),
                           mul(single(rs, sym(Family::u, i)), single(rs, sym(Family::v, i + 1))));
  for (int j = 1; j <= g - 1; ++j)
    iso.phi.images.emplace(sym(Family::xpair, j, j),
                           mul(single(rs, sym(Family::u, j)), single(rs, sym(Family::v, j))));
  // phi(x_jj) = x_j x_g^-1 . x_g x_j degenerates to v_g at j = g
  iso.phi.images.emplace(sym(Family::xpair, g, g), single(rs, sym(Family::v, g)));
  for (int i = 1; i <= g - 1; ++i) {
    Word w(plus);
    for (int j = i; j <= g - 1; ++j) {
      w = mul(mul(w, single(plus, sym(Family::xpair, j, j + 1))),
              single(plus, sym(Family::xpair, j + 1, j + 1), -1));
    }
    iso.psi.images.emplace(sym(Family::u, i), w);
  }
  for (int j = 1; j <= g; ++j) {
    Word w = single(plus, sym(Family::xpair, g, g));
    for (int t = g - 1; t >= j; --t) {
      w = mul(mul(w, single(plus, sym(Family::xpair, t, t + 1), -1)),
              single(plus, sym(Family::xpair, t, t)));
    }
    iso.psi.images.emplace(sym(Family::v, j), w);
  }
  for (int k = 1; k <= n - 1; ++k) {
    iso.phi.images.emplace(sym(Family::yplus, k), single(rs, sym(Family::yplus, k)));
    iso.phi.images.emplace(sym(Family::zplus, k), single(rs, sym(Family::zplus, k)));
    iso.psi.images.emplace(sym(Family::yplus, k), single(plus, sym(Family::yplus, k)));
    iso.psi.images.emplace(sym(Family::zplus, k), single(plus, sym(Family::zplus, k)));
  }
  return iso;
}

CheckReport verify_iso(const SurfaceKind& kind) {
  require_nonorientable(kind);
  CheckReport report;
  IsoPair iso = iso_pair(kind);
  AlphabetRef plus = Alphabet::plus(kind.genus, kind.boundary);
  AlphabetRef rs = Alphabet::reidemeister_schreier(kind.genus, kind.boundary);
  SymbolMap pb = plus_to_base(kind);
  SymbolMap rb = rs_to_base(kind);

  // (a) psi . phi and phi . psi fix every generator
  for (const GenSym& s : plus->symbols()) {
    Word round = substitute(substitute(single(plus, s), iso.phi), iso.psi);
    if (!(round == single(plus, s)))
      report.fail("psi(phi(" + to_string(s) + ")) = " + to_string(round));
  }
  for (const GenSym& s : rs->symbols()) {
    Word round = substitute(substitute(single(rs, s), iso.psi), iso.phi);
    if (!(round == single(rs, s)))
      report.fail("phi(psi(" + to_string(s) + ")) = " + to_string(round));
  }

  // (b) relator correspondence, first to first and second to second
  if (kind.closed()) {
    PlusPresentation pp = plus_presentation(kind);
    auto [rs1, rs2] = rs_relators(kind);
    const Word img1 = substitute(pp.relators[0], iso.phi);
    const Word img2 = substitute(pp.relators[1], iso.phi);
    if (!(img1 == rs1)) report.fail("phi(relator 1) = " + to_string(img1));
    if (!(img2 == rs2)) report.fail("phi(relator 2) = " + to_string(img2));
    const Word back1 = substitute(rs1, iso.psi);
    const Word back2 = substitute(rs2, iso.psi);
    if (!(back1 == pp.relators[0])) report.fail("psi(RS relator 1) = " + to_string(back1));
    if (!(back2 == pp.relators[1])) report.fail("psi(RS relator 2) = " + to_string(back2));
  } else {
    report.note("relator check skipped: free case (n >= 1)");
  }

  // (c) expanding phi(s) through the RS generators reproduces the base word
  for (const GenSym& s : plus->symbols()) {
    Word via_phi = substitute(substitute(single(plus, s), iso.phi), rb);
    Word direct = plus_generator_expansion(kind, s);
    if (!(via_phi == direct))
      report.fail("expansion of phi(" + to_string(s) + ") = " + to_string(via_phi) +
                  " differs from " + to_string(direct));
  }
  for (const GenSym& s : rs->symbols()) {
    Word via_psi = substitute(substitute(single(rs, s), iso.psi), pb);
    Word direct = substitute(single(rs, s), rb);
    if (!(via_psi == direct))
      report.fail("expansion of psi(" + to_string(s) + ") = " + to_string(via_psi) +
                  " differs from " + to_string(direct));
  }
  return report;
}

}  // namespace pi1
