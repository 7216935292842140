//! Syzygies of a polynomial sequence and the witness search on a cell.
//!
//! `Syz(f_1, ..., f_r)` is computed by running Buchberger over `R^{r+1}` on
//! the rows `(f_i, e_i)`. Component 0 (the payload) dominates every other
//! component; the tracking components `1..=r` are compared term over
//! position, a lower index being greater. Basis elements whose payload is
//! zero then generate the syzygy module.
//!
//! Completeness of [`get_syz`]: if every entry of every generator lies in
//! `I_X`, then so does every entry of every `R`-combination of them, since
//! `I_X` is an ideal. Checking a generating set therefore decides whether
//! any syzygy has an entry outside `I_X`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::arith::term::{Layout, Term};
use crate::arith::{same_ring, Monomial, PolyRing, Polynomial, PrimeField};
use crate::groebner::engine::{self, Vector};
use crate::groebner::GroebnerBasis;

/// Term order on free-module elements over a polynomial ring.
pub(crate) struct ModuleLayout {
    ring: Arc<PolyRing>,
    /// Whether component 0 dominates all others.
    payload: bool,
}

impl Layout for ModuleLayout {
    type Pos = u32;
    const SCALAR: bool = false;

    #[inline]
    fn field(&self) -> &PrimeField {
        self.ring.field()
    }

    #[inline]
    fn cmp_key(&self, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering {
        if self.payload && (a.0 == 0 || b.0 == 0) {
            if a.0 != b.0 {
                return if a.0 == 0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
            return self.ring.order().compare(a.1, b.1);
        }
        self.ring
            .order()
            .compare(a.1, b.1)
            .then_with(|| b.0.cmp(&a.0))
    }
}

/// A vector `(g_1, ..., g_r)` of polynomials over one ring.
#[derive(Clone, PartialEq, Eq)]
pub struct SyzygyVector {
    entries: Vec<Polynomial>,
}

impl SyzygyVector {
    pub fn new(entries: Vec<Polynomial>) -> Self {
        assert!(!entries.is_empty(), "vectors need at least one entry");
        assert!(
            entries
                .windows(2)
                .all(|w| same_ring(w[0].ring(), w[1].ring())),
            "entries live in different rings"
        );
        SyzygyVector { entries }
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    /// `sum g_i f_i`, expanded exactly.
    pub fn apply(&self, sequence: &[Polynomial]) -> Polynomial {
        assert_eq!(self.entries.len(), sequence.len());
        let ring = self.entries[0].ring();
        self.entries
            .iter()
            .zip(sequence)
            .fold(Polynomial::zero(ring), |acc, (g, f)| &acc + &(g * f))
    }

    /// The vector as module terms at positions `offset..offset + r`.
    fn to_terms(&self, layout: &ModuleLayout, offset: u32) -> Vector<u32> {
        let mut out: Vector<u32> = Vec::new();
        for (i, g) in self.entries.iter().enumerate() {
            out.extend(g.raw_terms().iter().map(|t| Term {
                pos: offset + i as u32,
                mono: t.mono,
                coeff: t.coeff,
            }));
        }
        out.sort_by(|a, b| layout.cmp_terms(b, a));
        out
    }

    fn from_terms(ring: &Arc<PolyRing>, terms: &[Term<u32>], offset: u32, r: usize) -> Self {
        let mut buckets: Vec<Vec<Term<()>>> = vec![Vec::new(); r];
        for t in terms {
            buckets[(t.pos - offset) as usize].push(Term {
                pos: (),
                mono: t.mono,
                coeff: t.coeff,
            });
        }
        let entries = buckets
            .into_iter()
            .map(|mut b| {
                b.sort_by(|x, y| ring.order().compare(&y.mono, &x.mono));
                Polynomial::from_sorted(ring, b)
            })
            .collect();
        SyzygyVector { entries }
    }
}

impl fmt::Debug for SyzygyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("")
            .field(
                &self
                    .entries
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// A submodule of `R^r` together with a Groebner basis for membership.
pub struct Submodule {
    layout: ModuleLayout,
    rank: usize,
    basis: Vec<Vector<u32>>,
}

impl Submodule {
    pub fn new(ring: &Arc<PolyRing>, rank: usize, gens: &[SyzygyVector]) -> Self {
        let layout = ModuleLayout {
            ring: ring.clone(),
            payload: false,
        };
        let input = gens
            .iter()
            .map(|v| {
                assert_eq!(v.len(), rank);
                v.to_terms(&layout, 0)
            })
            .collect();
        let basis = engine::groebner_basis(&layout, input);
        Submodule {
            layout,
            rank,
            basis,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Remainder of `v` on division by the module basis.
    pub fn normal_form(&self, v: &SyzygyVector) -> SyzygyVector {
        let reducers: Vec<&[Term<u32>]> = self.basis.iter().map(|b| b.as_slice()).collect();
        let rem = engine::full_reduce(&self.layout, v.to_terms(&self.layout, 0), &reducers);
        SyzygyVector::from_terms(&self.layout.ring, &rem, 0, self.rank)
    }

    pub fn contains(&self, v: &SyzygyVector) -> bool {
        self.normal_form(v).is_zero()
    }
}

/// The Koszul vectors `f_j e_i - f_i e_j` for `i < j`.
pub fn koszul_vectors(sequence: &[Polynomial]) -> Vec<SyzygyVector> {
    let r = sequence.len();
    let ring = sequence[0].ring();
    let mut out = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let mut entries = vec![Polynomial::zero(ring); r];
            entries[i] = sequence[j].clone();
            entries[j] = -&sequence[i];
            out.push(SyzygyVector { entries });
        }
    }
    out
}

/// Whether `v` is a scalar multiple of a single Koszul vector.
pub fn is_literal_koszul(v: &SyzygyVector, sequence: &[Polynomial]) -> bool {
    let support: Vec<usize> = (0..v.len()).filter(|&k| !v.entries[k].is_zero()).collect();
    let &[i, j] = support.as_slice() else {
        return false;
    };
    let (fi, fj) = (&sequence[i], &sequence[j]);
    let field = fi.ring().field();
    let (Some(a), Some(b)) = (v.entries[i].leading_coeff(), fj.leading_coeff()) else {
        return false;
    };
    let c = field.mul(a, field.inv(b).expect("nonzero"));
    v.entries[i] == fj.scale(c) && v.entries[j] == -&fi.scale(c)
}

/// Membership of a syzygy in the submodule spanned by Koszul vectors.
pub fn is_koszul_combination(v: &SyzygyVector, sequence: &[Polynomial]) -> bool {
    if v.is_zero() {
        return true;
    }
    if sequence.len() < 2 {
        return false;
    }
    Submodule::new(
        v.entries[0].ring(),
        sequence.len(),
        &koszul_vectors(sequence),
    )
    .contains(v)
}

/// Generators of the syzygy module of a sequence.
pub struct SyzygyBasis {
    sequence: Vec<Polynomial>,
    vectors: Vec<SyzygyVector>,
    /// Full basis of the module spanned by the rows `(f_i, e_i)`.
    rows: Vec<Vector<u32>>,
    layout: ModuleLayout,
}

impl SyzygyBasis {
    pub fn sequence(&self) -> &[Polynomial] {
        &self.sequence
    }

    /// Generators in emission order.
    pub fn vectors(&self) -> &[SyzygyVector] {
        &self.vectors
    }

    /// Whether `v` lies in the row module with zero payload, i.e. is a
    /// syzygy, decided by module reduction against the row basis.
    pub fn contains(&self, v: &SyzygyVector) -> bool {
        let reducers: Vec<&[Term<u32>]> = self.rows.iter().map(|b| b.as_slice()).collect();
        let terms = v.to_terms(&self.layout, 1);
        engine::full_reduce(&self.layout, terms, &reducers).is_empty()
    }
}

/// A generating set of `Syz(F)`. `F` must be nonempty.
pub fn syzygy_basis(sequence: &[Polynomial]) -> SyzygyBasis {
    assert!(!sequence.is_empty(), "syzygies of an empty sequence");
    let ring = sequence[0].ring().clone();
    let layout = ModuleLayout {
        ring: ring.clone(),
        payload: true,
    };
    let one = Monomial::one(ring.nvars());
    let input = sequence
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let f = f.to_ring(&ring);
            let mut row: Vector<u32> = f
                .raw_terms()
                .iter()
                .map(|t| Term {
                    pos: 0,
                    mono: t.mono,
                    coeff: t.coeff,
                })
                .collect();
            row.push(Term {
                pos: i as u32 + 1,
                mono: one,
                coeff: 1,
            });
            row.sort_by(|a, b| layout.cmp_terms(b, a));
            row
        })
        .collect();
    let rows = engine::groebner_basis(&layout, input);
    let vectors = rows
        .iter()
        .filter(|b| b[0].pos != 0)
        .map(|b| SyzygyVector::from_terms(&ring, b, 1, sequence.len()))
        .collect();
    SyzygyBasis {
        sequence: sequence.to_vec(),
        vectors,
        rows,
        layout,
    }
}

/// A polynomial `g` outside `I_X` with `g f_index` in the ideal of the
/// other equations. `index` is 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub g: Polynomial,
    pub index: usize,
}

/// Scans the syzygy generators of `sequence` (emission order, entries by
/// ascending index, literal Koszul vectors skipped) for an entry with
/// nonzero normal form modulo `basis`. `None` certifies that `sequence` is
/// a regular sequence locally outside the removed hypersurface.
pub fn get_syz(sequence: &[Polynomial], basis: &GroebnerBasis) -> Option<Witness> {
    if sequence.is_empty() || basis.is_unit() {
        return None;
    }
    let syz = syzygy_basis(sequence);
    syz.vectors
        .iter()
        .filter(|v| !is_literal_koszul(v, sequence))
        .find_map(|v| {
            v.entries
                .iter()
                .enumerate()
                .find(|(_, g)| !g.is_zero() && !basis.is_member(g))
                .map(|(index, g)| Witness {
                    g: g.clone(),
                    index,
                })
        })
}
