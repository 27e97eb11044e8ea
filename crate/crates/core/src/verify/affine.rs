//! Affine maps `x ↦ Ax + b` of `Z²`: a model of `⟨a, b | a², (ab)² = (ba)²⟩`
//! with `a` the coordinate swap and `b` the translation by `e₁`.

use super::GroupElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Affine {
    pub a: [[i64; 2]; 2],
    pub b: [i64; 2],
}

const ID: [[i64; 2]; 2] = [[1, 0], [0, 1]];
const SWAP: [[i64; 2]; 2] = [[0, 1], [1, 0]];

fn mat_mul(x: [[i64; 2]; 2], y: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut out = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

fn mat_vec(x: [[i64; 2]; 2], v: [i64; 2]) -> [i64; 2] {
    [x[0][0] * v[0] + x[0][1] * v[1], x[1][0] * v[0] + x[1][1] * v[1]]
}

impl Affine {
    pub fn identity() -> Self {
        Affine { a: ID, b: [0, 0] }
    }

    pub fn swap() -> Self {
        Affine { a: SWAP, b: [0, 0] }
    }

    pub fn translation(b: [i64; 2]) -> Self {
        Affine { a: ID, b }
    }

    /// The monomial part is a signed permutation matrix.
    fn is_monomial(&self) -> bool {
        let a = self.a;
        let row_ok = |r: [i64; 2]| (r[0] == 0) != (r[1] == 0) && r[0].abs() + r[1].abs() == 1;
        row_ok(a[0]) && row_ok(a[1]) && (a[0][0] == 0) != (a[1][0] == 0)
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv() } else { *self };
        (0..k.unsigned_abs()).fold(Affine::identity(), |acc, _| acc.mul(&base))
    }
}

impl GroupElement for Affine {
    /// `(f·g)(x) = f(g(x))`.
    fn mul(&self, other: &Self) -> Self {
        let bo = mat_vec(self.a, other.b);
        Affine {
            a: mat_mul(self.a, other.a),
            b: [bo[0] + self.b[0], bo[1] + self.b[1]],
        }
    }

    fn inv(&self) -> Self {
        debug_assert!(self.is_monomial());
        let t = [[self.a[0][0], self.a[1][0]], [self.a[0][1], self.a[1][1]]];
        let b = mat_vec(t, self.b);
        Affine { a: t, b: [-b[0], -b[1]] }
    }
}

/// Integer `k` with `v = k·u`, if any.
fn integer_multiple(v: [i64; 2], u: [i64; 2]) -> Option<i64> {
    if u == [0, 0] {
        return (v == [0, 0]).then_some(0);
    }
    let i = if u[0] != 0 { 0 } else { 1 };
    if v[i] % u[i] != 0 {
        return None;
    }
    let k = v[i] / u[i];
    (v == [k * u[0], k * u[1]]).then_some(k)
}

/// Some `k` with `h^k = target`, for `h` whose linear part squares to the
/// identity. Exact: `h² = (I, u)` is a translation, so `h^{2k} = (I, ku)` and
/// `h^{2k+1} = (A, ku + b)`.
pub fn power_exponent(h: &Affine, target: &Affine) -> Option<i64> {
    assert_eq!(mat_mul(h.a, h.a), ID, "linear part must be an involution");
    let u = h.mul(h).b;
    let mut found = None;
    if target.a == ID {
        found = integer_multiple(target.b, u).map(|k| 2 * k);
    }
    if found.is_none() && target.a == h.a {
        let d = [target.b[0] - h.b[0], target.b[1] - h.b[1]];
        found = integer_multiple(d, u).map(|k| 2 * k + 1);
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        let (a, b) = (Affine::swap(), Affine::translation([1, 0]));
        assert_eq!(a.mul(&a), Affine::identity());
        let ab = a.mul(&b);
        let ba = b.mul(&a);
        assert_eq!(ab.mul(&ab), ba.mul(&ba));
        assert_ne!(ab, ba);
        assert_eq!(b.mul(&b.inv()), Affine::identity());
    }

    #[test]
    fn powers_are_found() {
        let h = Affine::swap().mul(&Affine::translation([1, 0]));
        for k in -5..=5 {
            let k2 = power_exponent(&h, &h.pow(k)).unwrap();
            assert_eq!(h.pow(k2), h.pow(k));
        }
        let t = Affine::translation([2, -1]);
        assert_eq!(power_exponent(&t, &t.pow(3)), Some(3));
        assert_eq!(power_exponent(&t, &Affine::translation([1, 1])), None);
    }
}
