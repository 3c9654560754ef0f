#include "pi1/surface.hpp"

#include <algorithm>
#include <cstdlib>

namespace pi1 {

namespace {

Word xg(const AlphabetRef& a, int g) { return single(a, sym(Family::x, g)); }

Word x_square_run(const AlphabetRef& a, int from, int to) {
  Word w(a);
  for (int i = from; i <= to; ++i) w = mul(w, pow(single(a, sym(Family::x, i)), 2));
  return w;
}

}  // namespace

Word surface_relator(const SurfaceKind& kind, const AlphabetRef& a) {
  if (kind.orientable) {
    Word w(a);
    for (int i = 1; i <= kind.genus; ++i)
      w = mul(w, comm(single(a, sym(Family::alpha, i)), single(a, sym(Family::beta, i))));
    return w;
  }
  return x_square_run(a, 1, kind.genus);
}

SurfacePresentation pi1_presentation(const SurfaceKind& kind) {
  if (!kind.valid()) raise(Errc::invalid_kind, to_string(kind));
  SurfacePresentation p;
  p.kind = kind;
  p.alphabet = Alphabet::for_kind(kind);
  bool has_relator = kind.closed() && kind.genus >= 1;
  if (has_relator) {
    p.relator = surface_relator(kind, p.alphabet);
    Word r = *p.relator;
    for (const Word& base : {r, inv(r)}) {
      auto ls = base.letters();
      for (std::size_t off = 0; off < ls.size(); ++off) {
        std::vector<Letter> rot(ls.begin() + off, ls.end());
        rot.insert(rot.end(), ls.begin(), ls.begin() + off);
        p.symmetrized.push_back(Word(p.alphabet, rot));
      }
    }
  }
  return p;
}

PlusPresentation plus_presentation(const SurfaceKind& kind) {
  if (!kind.valid() || kind.orientable)
    raise(Errc::invalid_kind, "plus presentation needs a non-orientable kind");
  PlusPresentation p;
  p.kind = kind;
  p.alphabet = Alphabet::plus(kind.genus, kind.boundary);
  if (kind.closed()) {
    const int g = kind.genus;
    Word r1(p.alphabet);
    for (int j = 1; j <= g; ++j) r1 = mul(r1, single(p.alphabet, sym(Family::xpair, j, j)));
    Word r2 = single(p.alphabet, sym(Family::xpair, g, g));
    for (int j = g - 1; j >= 1; --j) {
      r2 = mul(r2, single(p.alphabet, sym(Family::xpair, j, j + 1), -1));
      r2 = mul(r2, single(p.alphabet, sym(Family::xpair, j, j)));
    }
    for (int i = 1; i <= g - 1; ++i)
      r2 = mul(r2, single(p.alphabet, sym(Family::xpair, i, i + 1)));
    p.relators = {r1, r2};
  }
  return p;
}

Word canonical_loop(const SurfaceKind& kind, const LoopName& name) {
  if (!kind.valid()) raise(Errc::invalid_kind, to_string(kind));
  const int g = kind.genus, n = kind.boundary;
  AlphabetRef a = Alphabet::for_kind(kind);
  auto need = [&](bool ok, const char* what) {
    if (!ok) raise(Errc::index_out_of_range, std::string(what) + " for " + to_string(kind));
  };
  auto need_kind = [&](bool ok, const char* what) {
    if (!ok) raise(Errc::invalid_loop_name, std::string(what) + " for " + to_string(kind));
  };
  auto gamma = [&](int l) -> Word {
    // gamma_l for l < n is a generator; gamma_n is the derived boundary loop
    if (l <= n - 1) return single(a, sym(Family::gamma, l));
    Word w = surface_relator(kind, a);
    for (int t = 1; t <= n - 1; ++t) w = mul(w, single(a, sym(Family::gamma, t)));
    return inv(w);
  };
  auto y_loop = [&](int l) -> Word {
    if (l <= n - 1) return single(a, sym(Family::y, l));
    Word w = x_square_run(a, 1, g);
    for (int t = 1; t <= n - 1; ++t) w = mul(w, single(a, sym(Family::y, t)));
    return inv(w);
  };

  switch (name.tag) {
    case LoopName::Tag::gamma_n:
      need_kind(kind.orientable, "gamma_n needs an orientable kind");
      need(n >= 1, "gamma_n needs n >= 1");
      return gamma(n);
    case LoopName::Tag::delta: {
      need_kind(kind.orientable, "delta needs an orientable kind");
      need(name.i >= 1 && name.i <= g - 1, "delta index");
      const int i = name.i;
      return mul(mul(single(a, sym(Family::beta, i), -1), single(a, sym(Family::alpha, i + 1))),
                 mul(single(a, sym(Family::beta, i + 1)), single(a, sym(Family::alpha, i + 1), -1)));
    }
    case LoopName::Tag::epsilon: {
      need_kind(kind.orientable, "epsilon needs an orientable kind");
      need(name.i >= 1 && name.i <= n, "epsilon index");
      need(g >= 1, "epsilon needs g >= 1");
      Word w = single(a, sym(Family::beta, g), -1);
      for (int l = 1; l <= name.i; ++l) w = mul(w, gamma(l));
      return w;
    }
    case LoopName::Tag::y_n:
      need_kind(!kind.orientable, "y_n needs a non-orientable kind");
      need(n >= 1, "y_n needs n >= 1");
      return y_loop(n);
    case LoopName::Tag::z_n:
      need_kind(!kind.orientable, "z_n needs a non-orientable kind");
      need(n >= 1, "z_n needs n >= 1");
      return conj(xg(a, g), y_loop(n));
    case LoopName::Tag::xpair:
      need_kind(!kind.orientable, "xpair needs a non-orientable kind");
      need(name.i >= 1 && name.i <= g && name.j >= 1 && name.j <= g, "xpair index");
      return mul(single(a, sym(Family::x, name.i)), single(a, sym(Family::x, name.j)));
    case LoopName::Tag::sep_orientable: {
      need_kind(kind.orientable, "sep_orientable needs an orientable kind");
      need(name.i >= 0 && name.i <= g && name.j >= 0 && name.j <= n, "sep_orientable h,m");
      Word w(a);
      for (int i = 1; i <= name.i; ++i)
        w = mul(w, comm(single(a, sym(Family::alpha, i)), single(a, sym(Family::beta, i))));
      for (int l = 1; l <= name.j; ++l) w = mul(w, gamma(l));
      return w;
    }
    case LoopName::Tag::sep_nonorientable: {
      need_kind(!kind.orientable, "sep_nonorientable needs a non-orientable kind");
      const int h = name.i, m = name.j;
      need(m >= 0 && m <= n, "sep_nonorientable m");
      auto x = [&](int i, int s = 1) { return single(a, sym(Family::x, i), s); };
      switch (name.variant) {
        case 'a':
          need(g >= 2, "case (a) needs g >= 2");
          return x(1);
        case 'b':
          need(g >= 2, "case (b) needs g >= 2");
          return mul(x(1), x(2));
        case 'c': {
          Word w(a);
          for (int i = 1; i <= g; ++i) w = mul(w, x(i));
          return w;
        }
        case 'd': {
          need(h >= 1 && h <= g - 1, "case (d) h");
          Word w = x_square_run(a, 1, h);
          for (int l = 1; l <= m; ++l) w = mul(w, y_loop(l));
          return w;
        }
        case 'e': {
          need(h >= 0 && 2 * h + 1 <= g, "case (e) h");
          Word w(a);
          if (h > 0) {
            for (int i = 1; i <= 2 * h; ++i) w = mul(w, x(i));
            w = mul(w, x(2 * h + 1, -1));
            for (int i = 2 * h; i >= 2; --i) w = mul(w, pow(x(i), -2));
            w = mul(w, x(1, -1));
            for (int i = 2; i <= 2 * h + 1; ++i) w = mul(w, x(i));
          }
          for (int l = 1; l <= m; ++l) w = mul(w, y_loop(l));
          return w;
        }
        default:
          raise(Errc::invalid_loop_name, "sep_nonorientable case must be one of a..e");
      }
    }
  }
  raise(Errc::invalid_loop_name, "unreachable");
}

int orientation_character(const Word& w) {
  if (!w.alphabet() || w.alphabet()->alphabet_kind() != AlphabetKind::nonorientable_base)
    raise(Errc::wrong_alphabet, "orientation character is defined on non-orientable base words");
  int parity = 0;
  for (const auto& l : w.letters())
    if (l.sym.family == Family::x) parity ^= 1;
  return parity;
}

namespace {

// Dehn's algorithm on hyperbolic closed-surface presentations: repeatedly
// replace a cyclic subword that covers more than half of some symmetrized
// relator by the shorter complement.
class DehnSolver {
 public:
  explicit DehnSolver(const SurfacePresentation& p) : alphabet_(p.alphabet) {
    for (const Word& r : p.symmetrized) rotations_.push_back(encode(r));
    relator_len_ = rotations_.empty() ? 0 : rotations_[0].size();
  }

  bool trivial(const Word& w) const {
    std::vector<int> cur = encode(w);
    cyclic_reduce(cur);
    while (!cur.empty()) {
      if (!step(cur)) return false;
      cyclic_reduce(cur);
    }
    return true;
  }

 private:
  std::vector<int> encode(const Word& w) const {
    std::vector<int> v;
    v.reserve(w.size());
    for (const auto& l : w.letters())
      v.push_back(static_cast<int>(*alphabet_->index_of(l.sym)) * 2 + (l.sign < 0 ? 1 : 0));
    return v;
  }

  static void reduce(std::vector<int>& v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (int c : v) {
      if (!out.empty() && out.back() == (c ^ 1))
        out.pop_back();
      else
        out.push_back(c);
    }
    v = std::move(out);
  }

  static void cyclic_reduce(std::vector<int>& v) {
    reduce(v);
    std::size_t lo = 0, hi = v.size();
    while (hi - lo >= 2 && v[lo] == (v[hi - 1] ^ 1)) {
      ++lo;
      --hi;
    }
    v = std::vector<int>(v.begin() + lo, v.begin() + hi);
  }

  bool step(std::vector<int>& w) const {
    const std::size_t wn = w.size(), rl = relator_len_;
    if (rl == 0) return false;
    const std::size_t half = rl / 2;
    for (std::size_t start = 0; start < wn; ++start) {
      for (const auto& rot : rotations_) {
        std::size_t match = 0;
        std::size_t limit = std::min(wn, rl);
        while (match < limit && w[(start + match) % wn] == rot[match]) ++match;
        if (match > half) {
          // w contains rot[0..match); replace by inverse of rot[match..rl)
          std::vector<int> next;
          next.reserve(wn - match + rl - match);
          for (std::size_t t = rl; t > match; --t) next.push_back(rot[t - 1] ^ 1);
          for (std::size_t t = match; t < wn; ++t) next.push_back(w[(start + t) % wn]);
          reduce(next);
          w = std::move(next);
          return true;
        }
      }
    }
    return false;
  }

  AlphabetRef alphabet_;
  std::vector<std::vector<int>> rotations_;
  std::size_t relator_len_ = 0;
};

// Klein bottle group <x1,x2 | x1^2 x2^2>: with u = x1 x2 and t = x2 this is
// <u,t | t u t^-1 = u^-1>, so every element has a unique form u^p t^q.
bool klein_trivial(const Word& w) {
  long p = 0, q = 0;
  auto push_u = [&](long e) { p += (q % 2 == 0) ? e : -e; };
  auto push_t = [&](long e) { q += e; };
  for (const auto& l : w.letters()) {
    if (l.sym.i == 1) {
      if (l.sign > 0) {
        push_u(1);
        push_t(-1);
      } else {
        push_t(1);
        push_u(-1);
      }
    } else {
      push_t(l.sign);
    }
  }
  return p == 0 && q == 0;
}

}  // namespace

bool is_trivial(const Word& w, const SurfacePresentation& p) {
  if (!same_alphabet(w.alphabet(), p.alphabet))
    raise(Errc::wrong_alphabet, "word is not over the presentation's alphabet");
  if (!p.relator) return w.empty();

  const int g = p.kind.genus;
  if (p.kind.orientable) {
    if (g == 1) {
      auto vec = exponent_vector(w);
      return std::all_of(vec.begin(), vec.end(), [](long c) { return c == 0; });
    }
    return DehnSolver(p).trivial(w);
  }
  if (g == 1) {
    return exponent_vector(w)[0] % 2 == 0;
  }
  if (g == 2) return klein_trivial(w);
  return DehnSolver(p).trivial(w);
}

bool equal_in(const SurfacePresentation& p, const Word& u, const Word& v) {
  return is_trivial(mul(u, inv(v)), p);
}

}  // namespace pi1
