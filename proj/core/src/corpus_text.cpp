#include <cstdint>

// Embedded transcription corpus.  The raw text below is canonical: dump
// reproduces it byte for byte, and its checksum is pinned at the bottom of
// this file.  "# orig:" comments record source readings that were
// normalized; each normalized record sits directly below its comment.

namespace pi1::corpus_text {

const char* actions = R"CORPUS(# Mapping-class generator action tables.
# location | constraint | level | name | dir | generator | image
#
# Constraint clauses: S/N kind filter, comparisons, and binders v=lo..hi
# (name parameters first, then per-row variables).  Bracketed indices are
# linear expressions in the bound variables; bare digits are literals.

# -- orientable, pi --
Tc0/a2/f | S g>=2 | pi | t_c0 | fwd | a2 | a2 b2^-1
Tc0/a2/b | S g>=2 | pi | t_c0 | bwd | a2 | a2 b2
Tcodd/a-/f | S g>=2 i=2..g | pi | t_c_odd(i) | fwd | a[i-1] | a[i-1] d[i-1]
Tcodd/a-/b | S g>=2 i=2..g | pi | t_c_odd(i) | bwd | a[i-1] | a[i-1] d[i-1]^-1
Tcodd/a/f | S g>=2 i=2..g | pi | t_c_odd(i) | fwd | a[i] | d[i-1]^-1 a[i]
Tcodd/a/b | S g>=2 i=2..g | pi | t_c_odd(i) | bwd | a[i] | d[i-1] a[i]
Tcodd/b-/f | S g>=2 i=2..g | pi | t_c_odd(i) | fwd | b[i-1] | d[i-1]^-1 b[i-1] d[i-1]
Tcodd/b-/b | S g>=2 i=2..g | pi | t_c_odd(i) | bwd | b[i-1] | d[i-1] b[i-1] d[i-1]^-1
Tcodd/i1 | S g>=1 | pi | t_c_odd(1) | fwd | - | !untranscribed stated for i=1 but the images reference a0, b0, d0
Tceven/b/f | S g>=1 i=1..g | pi | t_c_even(i) | fwd | b[i] | b[i] a[i]
Tceven/b/b | S g>=1 i=1..g | pi | t_c_even(i) | bwd | b[i] | b[i] a[i]^-1
Td/ag/f | S g>=1 n>=1 k=1..n | pi | t_d(k) | fwd | a[g] | a[g] e[k]
Td/ag/b | S g>=1 n>=1 k=1..n | pi | t_d(k) | bwd | a[g] | a[g] e[k]^-1
Td/bg/f | S g>=1 n>=1 k=1..n | pi | t_d(k) | fwd | b[g] | e[k]^-1 b[g] e[k]
Td/bg/b | S g>=1 n>=1 k=1..n | pi | t_d(k) | bwd | b[g] | e[k] b[g] e[k]^-1
Td/c/f | S g>=1 n>=1 k=1..n l=1..k | pi | t_d(k) | fwd | c[l] | e[k]^-1 c[l] e[k]
Td/c/b | S g>=1 n>=1 k=1..n l=1..k | pi | t_d(k) | bwd | c[l] | e[k] c[l] e[k]^-1

# -- non-orientable, pi --
# range: the a_i curves exist for i <= g-1
Ta/x/f | N g>=2 i=1..g-1 | pi | t_a(i) | fwd | x[i] | x[i] x[i+1]^-1 x[i]^-1
Ta/x/b | N g>=2 i=1..g-1 | pi | t_a(i) | bwd | x[i] | x[i]^2 x[i+1]
Ta/x+/f | N g>=2 i=1..g-1 | pi | t_a(i) | fwd | x[i+1] | x[i] x[i+1]^2
Ta/x+/b | N g>=2 i=1..g-1 | pi | t_a(i) | bwd | x[i+1] | x[i+1]^-1 x[i]^-1 x[i+1]
# orig: x1 x2 x3 x4^-1 x3^-2 x2^-2 x1
Tb/x1/f | N g>=4 | pi | t_b | fwd | x1 | x1 x2 x3 x4^-1 x3^-2 x2^-2 x1^-1
# orig: x1^2 x2^2 x3^2 x4 x3^-1 x2^-1 x1^-1
Tb/x1/b | N g>=4 | pi | t_b | bwd | x1 | x1^2 x2^2 x3^2 x4 x3^-1 x2^-1
Tb/x2/f | N g>=4 | pi | t_b | fwd | x2 | x1 x2^2 x3^2 x4 x3^-1
Tb/x2/b | N g>=4 | pi | t_b | bwd | x2 | x2 x3 x4^-1 x3^-2 x2^-2 x1^-1 x2
Tb/x3/f | N g>=4 | pi | t_b | fwd | x3 | x3 x4^-1 x3^-2 x2^-2 x1^-1 x2 x3
Tb/x3/b | N g>=4 | pi | t_b | bwd | x3 | x2^-1 x1 x2^2 x3^2 x4
Tb/x4/f | N g>=4 | pi | t_b | fwd | x4 | x3^-1 x2^-1 x1 x2^2 x3^2 x4^2
Tb/x4/b | N g>=4 | pi | t_b | bwd | x4 | x4^-1 x3^-2 x2^-2 x1^-1 x2 x3 x4
# orig: x2^-1 x1 x2
Y/x1/f | N g>=2 | pi | Y_mu_a1 | fwd | x1 | x2^-1 x1^-1 x2
Y/x1/b | N g>=2 | pi | Y_mu_a1 | bwd | x1 | x1^2 x2 x1^-1 x2^-1 x1^-2
# orig: x2^-2 x1^-1 x2^-1 x1 x2^2
Y/x2/f | N g>=2 | pi | Y_mu_a1 | fwd | x2 | x2^-1 x1^2 x2^2
# orig: x1 x2^-1 x1^-1
Y/x2/b | N g>=2 | pi | Y_mu_a1 | bwd | x2 | x1^2 x2
Br/xg/f | N n>=1 k=1..n | pi | B_r(k) | fwd | x[g] | x[g]^2 y[k] x[g]^-1
Br/xg/b | N n>=1 k=1..n | pi | B_r(k) | bwd | x[g] | x[g] y[k]
# orig: x[g] y[k] x[g]^-1
Br/yk/f | N n>=1 k=1..n | pi | B_r(k) | fwd | y[k] | x[g] y[k]^-1 x[g]^-1
# orig: y[k]^-1 x[g]^-1 y[k] x[g] y[k]
Br/yk/b | N n>=1 k=1..n | pi | B_r(k) | bwd | y[k] | y[k]^-1 x[g]^-1 y[k]^-1 x[g] y[k]
Br/yl/f | N n>=1 k=1..n l=1..k-1 | pi | B_r(k) | fwd | y[l] | x[g] y[k]^-1 x[g]^-1 y[k]^-1 y[l] y[k] x[g] y[k] x[g]^-1
Br/yl/b | N n>=1 k=1..n l=1..k-1 | pi | B_r(k) | bwd | y[l] | y[k]^-1 x[g]^-1 y[k]^-1 x[g] y[l] x[g]^-1 y[k] x[g] y[k]
Br0/xj/f | N j=1..g | pi | B_r0 | fwd | x[j] | x[g]^-1 x[j] x[g]
Br0/xj/b | N j=1..g | pi | B_r0 | bwd | x[j] | x[g] x[j] x[g]^-1
Br0/yl/f | N n>=2 l=1..n-1 | pi | B_r0 | fwd | y[l] | x[g]^-1 y[l] x[g]
Br0/yl/b | N n>=2 l=1..n-1 | pi | B_r0 | bwd | y[l] | x[g] y[l] x[g]^-1
Ts/yk/f | N n>=2 k=1..n-1 l=k+1..n | pi | t_s(k,l) | fwd | y[k] | y[k] y[l] y[k] y[l]^-1 y[k]^-1
Ts/yk/b | N n>=2 k=1..n-1 l=k+1..n | pi | t_s(k,l) | bwd | y[k] | y[l]^-1 y[k] y[l]
Ts/yl/f | N n>=2 k=1..n-1 l=k+1..n | pi | t_s(k,l) | fwd | y[l] | y[k] y[l] y[k]^-1
Ts/yl/b | N n>=2 k=1..n-1 l=k+1..n | pi | t_s(k,l) | bwd | y[l] | y[l]^-1 y[k]^-1 y[l] y[k] y[l]
# orig: y_k y_l k_k^-1 y_l^-1 y_m y_l y_k y_l^-1 y_k^-1 (k_k read as y_k)
Ts/ym/f | N n>=2 k=1..n-1 l=k+1..n m=k+1..l-1 | pi | t_s(k,l) | fwd | y[m] | y[k] y[l] y[k]^-1 y[l]^-1 y[m] y[l] y[k] y[l]^-1 y[k]^-1
Ts/ym/b | N n>=2 k=1..n-1 l=k+1..n m=k+1..l-1 | pi | t_s(k,l) | bwd | y[m] | y[l]^-1 y[k]^-1 y[l] y[k] y[m] y[k]^-1 y[l]^-1 y[k] y[l]

# -- non-orientable, pi_plus --
Ta+/X-/f | N g>=2 i=1..g-1 i>=2 | pi_plus | t_a(i) | fwd | X[i-1]_[i] | X[i-1]_[i] X[i]_[i+1]^-1
Ta+/X-/b | N g>=2 i=1..g-1 i>=2 | pi_plus | t_a(i) | bwd | X[i-1]_[i] | X[i-1]_[i] X[i]_[i+1]
Ta+/X+/f | N g>=2 i=1..g-1 i<=g-2 | pi_plus | t_a(i) | fwd | X[i+1]_[i+2] | X[i]_[i+1] X[i+1]_[i+2]
Ta+/X+/b | N g>=2 i=1..g-1 i<=g-2 | pi_plus | t_a(i) | bwd | X[i+1]_[i+2] | X[i]_[i+1]^-1 X[i+1]_[i+2]
Ta+/Xii/f | N g>=2 i=1..g-1 | pi_plus | t_a(i) | fwd | X[i]_[i] | X[i]_[i+1] X[i+1]_[i+1]^-1 X[i]_[i+1]^-1
Ta+/Xii/b | N g>=2 i=1..g-1 | pi_plus | t_a(i) | bwd | X[i]_[i] | X[i]_[i] X[i+1]_[i+1] X[i]_[i+1]^-1 X[i]_[i] X[i]_[i+1]
Ta+/Xjj/f | N g>=2 i=1..g-1 | pi_plus | t_a(i) | fwd | X[i+1]_[i+1] | X[i]_[i+1] X[i+1]_[i+1] X[i]_[i+1]^-1 X[i]_[i] X[i+1]_[i+1]
Ta+/Xjj/b | N g>=2 i=1..g-1 | pi_plus | t_a(i) | bwd | X[i+1]_[i+1] | X[i]_[i+1]^-1 X[i]_[i]^-1 X[i]_[i+1]
Ta+/z/f | N g>=2 i=1..g-1 i==g-1 n>=2 l=1..n-1 | pi_plus | t_a(i) | fwd | z[l] | X[g-1]_[g] z[l] X[g-1]_[g]^-1
Ta+/z/b | N g>=2 i=1..g-1 i==g-1 n>=2 l=1..n-1 | pi_plus | t_a(i) | bwd | z[l] | X[g-1]_[g]^-1 z[l] X[g-1]_[g]
Tb+/X45/f | N g>=5 | pi_plus | t_b | fwd | X4_5 | X2_3^-1 X1_2 X2_3 X3_4 X4_5
Tb+/X45/b | N g>=5 | pi_plus | t_b | bwd | X4_5 | X3_4^-1 X2_3^-1 X1_2^-1 X2_3 X4_5
Tb+/X11/f | N g>=4 | pi_plus | t_b | fwd | X1_1 | X1_2 X3_4 X4_4^-1 X3_3^-1 X1_2^-1 X1_3 X3_4^-1 X2_3^-1 X1_2^-1
Tb+/X11/b | N g>=4 | pi_plus | t_b | bwd | X1_1 | X1_1 X2_2 X3_3 X4_4 X3_4^-1 X1_2^-1 X1_1 X1_2 X2_3 X3_4 X2_3^-1
Tb+/X22/f | N g>=4 | pi_plus | t_b | fwd | X2_2 | X1_2 X2_3 X3_4 X1_3^-1 X1_1 X2_2 X3_3 X4_4 X3_4^-1
Tb+/X22/b | N g>=4 | pi_plus | t_b | bwd | X2_2 | X2_3 X3_4^-1 X2_3^-1 X1_2^-1 X2_2 X3_4 X4_4^-1 X3_3^-1 X2_2^-1 X1_1^-1 X1_2
Tb+/X33/f | N g>=4 | pi_plus | t_b | fwd | X3_3 | X3_4 X4_4^-1 X3_3^-1 X2_2^-1 X1_1^-1 X1_3 X2_3^-1 X2_2 X3_3 X3_4^-1 X2_3^-1 X1_2^-1 X2_3
Tb+/X33/b | N g>=4 | pi_plus | t_b | bwd | X3_3 | X1_2^-1 X1_1 X2_2 X3_3 X4_4 X2_4^-1 X1_2 X2_3 X3_4
Tb+/X44/f | N g>=4 | pi_plus | t_b | fwd | X4_4 | X2_3^-1 X1_2 X2_3 X3_4 X4_4 X3_4^-1 X1_2^-1 X1_1 X2_2 X3_3 X4_4
Tb+/X44/b | N g>=4 | pi_plus | t_b | bwd | X4_4 | X3_4^-1 X2_3^-1 X1_2^-1 X2_4 X3_4^-1 X2_2^-1 X1_1^-1 X1_2 X3_4
Tb+/z/f | N g>=4 g==4 n>=2 k=1..n-1 | pi_plus | t_b | fwd | z[k] | X2_3^-1 X1_2 X2_3 X3_4 z[k] X3_4^-1 X2_3^-1 X1_2^-1 X2_3
Tb+/z/b | N g>=4 g==4 n>=2 k=1..n-1 | pi_plus | t_b | bwd | z[k] | X3_4^-1 X2_3^-1 X1_2^-1 X2_3 z[k] X2_3^-1 X1_2 X2_3 X3_4
Y+/X12/f | N g>=2 | pi_plus | Y_mu_a1 | fwd | X1_2 | X1_2^-1 X1_1 X2_2
Y+/X12/b | N g>=2 | pi_plus | Y_mu_a1 | bwd | X1_2 | X1_1 X2_2 X1_2^-1
Y+/X23/f | N g>=3 | pi_plus | Y_mu_a1 | fwd | X2_3 | X1_2^-1 X1_1 X1_2 X2_3
Y+/X23/b | N g>=3 | pi_plus | Y_mu_a1 | bwd | X2_3 | X1_1 X2_3
Y+/X11/f | N g>=2 | pi_plus | Y_mu_a1 | fwd | X1_1 | X1_2^-1 X1_1^-1 X1_2
Y+/X11/b | N g>=2 | pi_plus | Y_mu_a1 | bwd | X1_1 | X1_1 X2_2 X1_2^-1 X1_1^-1 X1_2 X2_2^-1 X1_1^-1
Y+/X22/f | N g>=2 | pi_plus | Y_mu_a1 | fwd | X2_2 | X1_2^-1 X1_1 X1_2 X1_1 X2_2
Y+/X22/b | N g>=2 | pi_plus | Y_mu_a1 | bwd | X2_2 | X1_1 X2_2 X1_2^-1 X1_1 X1_2
Y+/z/f | N g>=2 g==2 n>=2 k=1..n-1 | pi_plus | Y_mu_a1 | fwd | z[k] | X1_2^-1 X1_1 X1_2 z[k] X1_2^-1 X1_1^-1 X1_2
Y+/z/b | N g>=2 g==2 n>=2 k=1..n-1 | pi_plus | Y_mu_a1 | bwd | z[k] | X1_1 z[k] X1_1^-1
Br+/X-/f | N g>=2 n>=1 k=1..n | pi_plus | B_r(k) | fwd | X[g-1]_[g] | X[g-1]_[g] z[k]
Br+/X-/b | N g>=2 n>=1 k=1..n | pi_plus | B_r(k) | bwd | X[g-1]_[g] | X[g-1]_[g] y[k]
Br+/Xgg/f | N n>=1 k=1..n | pi_plus | B_r(k) | fwd | X[g]_[g] | X[g]_[g] y[k] z[k]
Br+/Xgg/b | N n>=1 k=1..n | pi_plus | B_r(k) | bwd | X[g]_[g] | z[k] X[g]_[g] y[k]
Br+/yk/f | N n>=1 k=1..n | pi_plus | B_r(k) | fwd | y[k] | z[k]^-1
Br+/yk/b | N n>=1 k=1..n | pi_plus | B_r(k) | bwd | y[k] | y[k]^-1 X[g]_[g]^-1 z[k]^-1 X[g]_[g] y[k]
# orig: stated for l != k; the B_r0-conjugate z rows force l < k
Br+/yl/f | N n>=1 k=1..n l=1..k-1 | pi_plus | B_r(k) | fwd | y[l] | z[k]^-1 y[k]^-1 y[l] y[k] z[k]
Br+/yl/b | N n>=1 k=1..n l=1..k-1 | pi_plus | B_r(k) | bwd | y[l] | y[k]^-1 X[g]_[g]^-1 z[k]^-1 X[g]_[g] y[l] X[g]_[g]^-1 z[k] X[g]_[g] y[k]
Br+/zk/f | N n>=1 k=1..n | pi_plus | B_r(k) | fwd | z[k] | X[g]_[g] y[k]^-1 X[g]_[g]^-1
Br+/zk/b | N n>=1 k=1..n | pi_plus | B_r(k) | bwd | z[k] | y[k]^-1
Br+/zm/f | N n>=1 k=1..n m=1..k-1 | pi_plus | B_r(k) | fwd | z[m] | z[k]^-1 z[m] z[k]
Br+/zm/b | N n>=1 k=1..n m=1..k-1 | pi_plus | B_r(k) | bwd | z[m] | y[k]^-1 z[m] y[k]
Br+/zj/f | N n>=1 k=1..n j=k+1..n-1 | pi_plus | B_r(k) | fwd | z[j] | X[g]_[g] y[k] X[g]_[g]^-1 z[j] X[g]_[g] y[k]^-1 X[g]_[g]^-1
Br+/zj/b | N n>=1 k=1..n j=k+1..n-1 | pi_plus | B_r(k) | bwd | z[j] | z[k] z[j] z[k]^-1
Br0+/Xi/f | N g>=3 i=1..g-2 | pi_plus | B_r0 | fwd | X[i]_[i+1] | X[i]_[g]^-1 X[i]_[i] X[i+1]_[g]
Br0+/Xi/b | N g>=3 i=1..g-2 | pi_plus | B_r0 | bwd | X[i]_[i+1] | X[g]_[i] X[i+1]_[i+1] X[g]_[i+1]^-1
Br0+/X-/f | N g>=2 | pi_plus | B_r0 | fwd | X[g-1]_[g] | X[g-1]_[g]^-1 X[g-1]_[g-1] X[g]_[g]
Br0+/X-/b | N g>=2 | pi_plus | B_r0 | bwd | X[g-1]_[g] | X[g]_[g-1]
Br0+/Xjj/f | N g>=2 j=1..g-1 | pi_plus | B_r0 | fwd | X[j]_[j] | X[j]_[g]^-1 X[j]_[j] X[j]_[g]
Br0+/Xjj/b | N g>=2 j=1..g-1 | pi_plus | B_r0 | bwd | X[j]_[j] | X[g]_[j] X[j]_[j] X[g]_[j]^-1
Br0+/Xgg/f | N | pi_plus | B_r0 | fwd | X[g]_[g] | X[g]_[g]
Br0+/Xgg/b | N | pi_plus | B_r0 | bwd | X[g]_[g] | X[g]_[g]
Br0+/y/f | N n>=2 l=1..n-1 | pi_plus | B_r0 | fwd | y[l] | X[g]_[g]^-1 z[l] X[g]_[g]
Br0+/y/b | N n>=2 l=1..n-1 | pi_plus | B_r0 | bwd | y[l] | z[l]
Br0+/z/f | N n>=2 l=1..n-1 | pi_plus | B_r0 | fwd | z[l] | y[l]
Br0+/z/b | N n>=2 l=1..n-1 | pi_plus | B_r0 | bwd | z[l] | X[g]_[g] y[l] X[g]_[g]^-1
Ts+/yk/f | N n>=2 k=1..n-1 l=k+1..n | pi_plus | t_s(k,l) | fwd | y[k] | y[k] y[l] y[k] y[l]^-1 y[k]^-1
Ts+/yk/b | N n>=2 k=1..n-1 l=k+1..n | pi_plus | t_s(k,l) | bwd | y[k] | y[l]^-1 y[k] y[l]
Ts+/yl/f | N n>=2 k=1..n-1 l=k+1..n | pi_plus | t_s(k,l) | fwd | y[l] | y[k] y[l] y[k]^-1
Ts+/yl/b | N n>=2 k=1..n-1 l=k+1..n | pi_plus | t_s(k,l) | bwd | y[l] | y[l]^-1 y[k]^-1 y[l] y[k] y[l]
Ts+/ym/f | N n>=2 k=1..n-1 l=k+1..n m=k+1..l-1 | pi_plus | t_s(k,l) | fwd | y[m] | y[k] y[l] y[k]^-1 y[l]^-1 y[m] y[l] y[k] y[l]^-1 y[k]^-1
Ts+/ym/b | N n>=2 k=1..n-1 l=k+1..n m=k+1..l-1 | pi_plus | t_s(k,l) | bwd | y[m] | y[l]^-1 y[k]^-1 y[l] y[k] y[m] y[k]^-1 y[l]^-1 y[k] y[l]
Ts+/zk/f | N n>=2 k=1..n-1 l=k+1..n | pi_plus | t_s(k,l) | fwd | z[k] | z[k] z[l] z[k] z[l]^-1 z[k]^-1
Ts+/zk/b | N n>=2 k=1..n-1 l=k+1..n | pi_plus | t_s(k,l) | bwd | z[k] | z[l]^-1 z[k] z[l]
Ts+/zl/f | N n>=2 k=1..n-1 l=k+1..n | pi_plus | t_s(k,l) | fwd | z[l] | z[k] z[l] z[k]^-1
Ts+/zl/b | N n>=2 k=1..n-1 l=k+1..n | pi_plus | t_s(k,l) | bwd | z[l] | z[l]^-1 z[k]^-1 z[l] z[k] z[l]
Ts+/zm/f | N n>=2 k=1..n-1 l=k+1..n m=k+1..l-1 | pi_plus | t_s(k,l) | fwd | z[m] | z[k] z[l] z[k]^-1 z[l]^-1 z[m] z[l] z[k] z[l]^-1 z[k]^-1
Ts+/zm/b | N n>=2 k=1..n-1 l=k+1..n m=k+1..l-1 | pi_plus | t_s(k,l) | bwd | z[m] | z[l]^-1 z[k]^-1 z[l] z[k] z[m] z[k]^-1 z[l]^-1 z[k] z[l]
)CORPUS";

const char* identities = R"CORPUS(# Displayed identities, replayed as free-word equalities after expansion.
# id | constraint | level | lhs | rhs

# boundary and chain loops
Lde/gamma_n | S n>=1 | pi | c[n] | inv( prod[i=1..g]( comm( a[i] ; b[i] ) ) prod[l=1..n-1]( c[l] ) )
Lde/delta | S g>=2 i=1..g-1 | pi | d[i] | b[i]^-1 a[i+1] b[i+1] a[i+1]^-1
Lde/epsilon | S g>=1 n>=1 k=1..n | pi | e[k] | b[g]^-1 prod[l=1..k]( c[l] )
Lyn/y_n | N n>=1 | pi | y[n] | inv( prod[i=1..g]( x[i]^2 ) prod[l=1..n-1]( y[l] ) )

# pair loops
Lij/xij | N g>=3 i=1..g-2 j=i+2..g | pi_plus | X[i]_[j] | X[i]_[j-1] X[j-1]_[j-1]^-1 X[j-1]_[j]
Lij/xji | N g>=2 i=1..g-1 j=i+1..g | pi_plus | X[j]_[i] | X[j]_[j] X[i]_[j]^-1 X[i]_[i]
Lij/y_n | N n>=1 | pi_plus | y[n] | inv( prod[j=1..g]( X[j]_[j] ) prod[l=1..n-1]( y[l] ) )
Lij/z_n | N n>=1 | pi_plus | z[n] | inv( X[g]_[1] prod[i=1..g-1]( X[i]_[i+1] ) prod[l=1..n-1]( z[l] ) )

# separating loops, base level
Sep/a | N g>=2 | pi | @sepNa | x1
Sep/b | N g>=2 | pi | @sepNb | x1 x2
Sep/c | N g>=1 | pi | @sepNc | prod[i=1..g]( x[i] )
Sep/d | N g>=2 h=1..g-1 m=0..n | pi | @sepNd[h,m] | prod[i=1..h]( x[i]^2 ) prod[l=1..m]( y[l] )
Sep/e | N g>=3 h=1..g 2h+1<=g m=0..n | pi | @sepNe[h,m] | prod[i=1..2h]( x[i] ) x[2h+1]^-1 rprod[i=2..2h]( x[i]^-2 ) x1^-1 prod[i=2..2h+1]( x[i] ) prod[l=1..m]( y[l] )
Sep/e0 | N g>=1 m=0..n | pi | @sepNe[0,m] | prod[l=1..m]( y[l] )

# separating loops, pi_plus level
Sep+/b | N g>=2 | pi_plus | @sepNb | X1_2
Sep+/c | N g>=2 h=0..g 2h+2==g | pi_plus | @sepNc | prod[t=1..h+1]( X[2t-1]_[2t] )
Sep+/d | N g>=2 h=1..g-1 m=0..n | pi_plus | @sepNd[h,m] | prod[j=1..h]( X[j]_[j] ) prod[l=1..m]( y[l] )
Sep+/e | N g>=3 h=1..g 2h+1<=g m=0..n | pi_plus | @sepNe[h,m] | prod[t=1..h]( X[2t-1]_[2t] ) X[2h]_[2h+1]^-1 rprod[s=1..2h-1]( X[s]_[s+1]^-1 ) prod[t=1..h]( X[2t]_[2t+1] ) prod[l=1..m]( y[l] )
Sep+/e0 | N g>=1 m=0..n | pi_plus | @sepNe[0,m] | prod[l=1..m]( y[l] )

# transversal rewriting of the closed relator
Rw/rel1 | N g>=1 | rs | @rsrel1 | prod[i=1..g]( x[i]^2 )
Rw/rel2 | N g>=1 | rs | @rsrel2 | x[g] prod[i=1..g]( x[i]^2 ) x[g]^-1

# well-definedness of phi and psi on the relators
Wd/phi_rel1 | N g>=1 | rs | phi( @plusrel1 ) | @rsrel1
Wd/phi_rel2 | N g>=1 | rs | phi( @plusrel2 ) | @rsrel2
Wd/psi_rel1 | N g>=1 | pi_plus | psi( @rsrel1 ) | @plusrel1
Wd/psi_rel2 | N g>=1 | pi_plus | psi( @rsrel2 ) | @plusrel2

# mutual inverse computations
Inv/psiphi_X | N g>=2 i=1..g-1 | pi_plus | psi( phi( X[i]_[i+1] ) ) | X[i]_[i+1]
Inv/psiphi_Xjj | N g>=1 j=1..g | pi_plus | psi( phi( X[j]_[j] ) ) | X[j]_[j]
Inv/psiphi_y | N n>=2 k=1..n-1 | pi_plus | psi( phi( y[k] ) ) | y[k]
Inv/psiphi_z | N n>=2 k=1..n-1 | pi_plus | psi( phi( z[k] ) ) | z[k]
Inv/phipsi_u | N g>=2 i=1..g-1 | rs | phi( psi( u[i] ) ) | u[i]
Inv/phipsi_v | N g>=1 j=1..g | rs | phi( psi( v[j] ) ) | v[j]
Inv/phipsi_y | N n>=2 k=1..n-1 | rs | phi( psi( y[k] ) ) | y[k]
Inv/phipsi_z | N n>=2 k=1..n-1 | rs | phi( psi( z[k] ) ) | z[k]
)CORPUS";

// FNV-1a of identities over FNV-1a of actions; enforced at load.
extern const std::uint64_t pinned_checksum = 0x8c3d6b0f5bd5911aull;

}  // namespace pi1::corpus_text
