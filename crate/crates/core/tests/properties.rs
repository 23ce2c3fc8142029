//! Randomized invariants: exact linear algebra over every supported field,
//! and the radicals' behaviour under change of basis and direct sums.

use proptest::prelude::*;

use radlie::corpus::registry::standard;
use radlie::exactla::{FieldSpec, Matrix, Subspace};
use radlie::liecore::LieAlgebra;
use radlie::radicals::{frattini, nilradical, solvable_radical};
use radlie::Caps;

const FIELDS: [u32; 5] = [0, 2, 3, 5, 7];

fn field(i: usize) -> FieldSpec {
    match FIELDS[i] {
        0 => FieldSpec::RATIONALS,
        p => FieldSpec::gf(p),
    }
}

fn matrix(f: FieldSpec, rows: usize, cols: usize, raw: &[i64]) -> Matrix {
    let rows = (0..rows)
        .map(|i| (0..cols).map(|j| f.from_i64(raw[(i * cols + j) % raw.len()])).collect())
        .collect();
    Matrix::from_rows(f, cols, rows).unwrap()
}

fn arb_matrix() -> impl Strategy<Value = Matrix> {
    (0..FIELDS.len(), 1usize..=6, 1usize..=6, prop::collection::vec(-3i64..=3, 36))
        .prop_map(|(fi, r, c, raw)| matrix(field(fi), r, c, &raw))
}

/// Two random subspaces of the same ambient space.
fn arb_pair() -> impl Strategy<Value = (Subspace, Subspace)> {
    (
        0..FIELDS.len(),
        1usize..=6,
        0usize..=6,
        0usize..=6,
        prop::collection::vec(-2i64..=2, 36),
        prop::collection::vec(-2i64..=2, 36),
    )
        .prop_map(|(fi, n, ka, kb, ra, rb)| {
            let f = field(fi);
            let span = |k: usize, raw: &[i64]| {
                Subspace::span(f, n, matrix(f, k.max(1), n, raw).to_rows()).unwrap()
            };
            let a = if ka == 0 { Subspace::zero(f, n) } else { span(ka, &ra) };
            (a, span(kb, &rb))
        })
}

/// Unit lower triangular times unit upper triangular: always invertible.
fn invertible(f: FieldSpec, n: usize, raw: &[i64]) -> Matrix {
    let mut lo = Matrix::identity(f, n);
    let mut up = Matrix::identity(f, n);
    let mut k = 0;
    for i in 0..n {
        for j in 0..i {
            lo.set(i, j, f.from_i64(raw[k % raw.len()]));
            up.set(j, i, f.from_i64(raw[(k + 7) % raw.len()]));
            k += 1;
        }
    }
    lo.mul(&up).unwrap()
}

fn small_algebras() -> Vec<LieAlgebra> {
    standard()
        .into_iter()
        .map(|f| f.algebra)
        .filter(|l| l.dim() <= 6)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rref_is_idempotent(a in arb_matrix()) {
        let (r, piv) = a.rref();
        prop_assert_eq!(r.rref(), (r.clone(), piv.clone()));
        prop_assert_eq!(a.rank(), piv.len());
    }

    #[test]
    fn rank_plus_nullity(a in arb_matrix()) {
        prop_assert_eq!(a.rank() + a.nullity(), a.ncols());
        for v in a.kernel().basis() {
            prop_assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rank_of_transpose(a in arb_matrix()) {
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn grassmann((u, w) in arb_pair()) {
        let s = u.sum(&w);
        let i = u.intersect(&w);
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains(&u) && s.contains(&w));
        prop_assert!(u.contains(&i) && w.contains(&i));
        prop_assert_eq!(&s, &w.sum(&u));
        prop_assert_eq!(&i, &w.intersect(&u));
    }

    #[test]
    fn annihilator_and_complement((u, _) in arb_pair()) {
        let n = u.ambient_dim();
        prop_assert_eq!(u.annihilator().dim(), n - u.dim());
        prop_assert_eq!(&u.annihilator().annihilator(), &u);
        let c = u.complement();
        prop_assert!(u.sum(&c).is_full());
        prop_assert!(u.intersect(&c).is_zero());
    }

    #[test]
    fn preimage_of_image((u, _) in arb_pair(), raw in prop::collection::vec(-3i64..=3, 36)) {
        let p = invertible(u.field(), u.ambient_dim(), &raw);
        prop_assert_eq!(&u.image(&p).preimage(&p), &u);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Radicals are basis-independent: computing in a new basis and mapping
    /// back gives the same subspace.
    #[test]
    fn radicals_follow_change_of_basis(idx in 0usize..64, raw in prop::collection::vec(-2i64..=2, 36)) {
        let algebras = small_algebras();
        let l = &algebras[idx % algebras.len()];
        let p = invertible(l.field(), l.dim(), &raw);
        let m = l.change_basis(&p).unwrap();
        m.validate().unwrap();
        let caps = Caps::default();
        prop_assert_eq!(&nilradical(&m, &caps).unwrap().image(&p), &nilradical(l, &caps).unwrap());
        prop_assert_eq!(&solvable_radical(&m, &caps).unwrap().image(&p), &solvable_radical(l, &caps).unwrap());
        prop_assert_eq!(&m.centre().image(&p), &l.centre());
        if l.field().is_finite() {
            let a = frattini(&m, &caps, None).unwrap().ideal.image(&p);
            prop_assert_eq!(&a, &frattini(l, &caps, None).unwrap().ideal);
        }
    }

    /// Z(L) ⊆ N ⊆ R, and φ is a nilpotent ideal.
    #[test]
    fn radical_chain(idx in 0usize..64) {
        let algebras = small_algebras();
        let l = &algebras[idx % algebras.len()];
        let caps = Caps::default();
        let n = nilradical(l, &caps).unwrap();
        let r = solvable_radical(l, &caps).unwrap();
        prop_assert!(n.contains(&l.centre()));
        prop_assert!(r.contains(&n));
        prop_assert!(l.is_ideal(&n).unwrap() && l.is_ideal(&r).unwrap());
        if l.field().is_finite() {
            let phi = frattini(l, &caps, None).unwrap().ideal;
            prop_assert!(n.contains(&phi));
        }
    }

    /// The radicals of a direct sum are the sums of the radicals.
    #[test]
    fn direct_sums(i in 0usize..64, j in 0usize..64) {
        let algebras = small_algebras();
        let (a, b) = (&algebras[i % algebras.len()], &algebras[j % algebras.len()]);
        prop_assume!(a.field() == b.field() && a.dim() + b.dim() <= 8);
        let s = a.direct_sum(b).unwrap();
        let caps = Caps::default();
        let embed = |u: &Subspace, off: usize| {
            let mut vs = Vec::new();
            for v in u.basis() {
                let mut w = s.zero_vector();
                for (k, x) in v.iter().enumerate() {
                    w[off + k] = x.clone();
                }
                vs.push(w);
            }
            s.span(vs).unwrap()
        };
        let both = |f: &dyn Fn(&LieAlgebra) -> Subspace| embed(&f(a), 0).sum(&embed(&f(b), a.dim()));
        prop_assert_eq!(&nilradical(&s, &caps).unwrap(), &both(&|l| nilradical(l, &caps).unwrap()));
        prop_assert_eq!(&solvable_radical(&s, &caps).unwrap(), &both(&|l| solvable_radical(l, &caps).unwrap()));
        prop_assert_eq!(&s.centre(), &both(&|l| l.centre()));
    }
}
