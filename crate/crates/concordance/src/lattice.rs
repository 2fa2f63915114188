//! Exact linear algebra on plumbing intersection lattices: signature and
//! determinant by congruence diagonalization over the rationals, Wu classes
//! by Gaussian elimination over F2, and the Neumann-Siebenmann mu-bar
//! invariant `(signature - wu^2)/8`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;

use crate::exact::Rational;
use crate::plumbing::PlumbingTree;
use crate::{Error, Result};

/// A symmetric integer bilinear form, stored dense in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionForm {
    dim: usize,
    entries: Vec<i64>,
}

impl IntersectionForm {
    /// The intersection form of a plumbing tree: weights on the diagonal and
    /// a 1 for every edge.
    pub fn from_tree(tree: &PlumbingTree) -> Self {
        let dim = tree.node_count();
        let mut entries = vec![0i64; dim * dim];
        for (i, w) in tree.weights().into_iter().enumerate() {
            entries[i * dim + i] = w;
        }
        for (u, v) in tree.edges() {
            entries[u * dim + v] = 1;
            entries[v * dim + u] = 1;
        }
        IntersectionForm { dim, entries }
    }

    /// Build from explicit rows, which must form a symmetric square matrix.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Precondition("matrix must be square".into()));
        }
        let entries: Vec<i64> = rows.into_iter().flatten().collect();
        for i in 0..dim {
            for j in 0..i {
                if entries[i * dim + j] != entries[j * dim + i] {
                    return Err(Error::Precondition(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(IntersectionForm { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    /// JSON form `{"dimension": n, "entries": [row-major ints]}`.
    pub fn to_json(&self) -> Value {
        json!({ "dimension": self.dim, "entries": self.entries })
    }
}

/// Signature data of a symmetric form, all computed exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormInvariants {
    pub signature: i64,
    pub determinant: BigInt,
    pub negative_definite: bool,
    /// True when the form is singular; `signature` then describes the
    /// nondegenerate part and `determinant` is 0.
    pub degenerate: bool,
}

/// Diagonalize by congruence over the rationals and read off signature and
/// determinant.
///
/// Pivots on the first nonzero diagonal entry of the active block. When every
/// active diagonal entry vanishes but an off-diagonal one does not, the basis
/// change `e_i += e_j` (a congruence, so signature- and
/// determinant-preserving) creates a pivot and the rank-2 hyperbolic block
/// contributes a (+1, -1) pair through the ordinary pivoting path.
pub fn signature_and_determinant(form: &IntersectionForm) -> FormInvariants {
    let n = form.dim();
    let mut diag: Vec<Rational> = (0..n)
        .map(|i| Rational::from_integer(BigInt::from(form.entry(i, i))))
        .collect();
    let mut rows: Vec<BTreeMap<usize, Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && form.entry(i, j) != 0)
                .map(|j| (j, Rational::from_integer(BigInt::from(form.entry(i, j)))))
                .collect()
        })
        .collect();
    let mut alive = vec![true; n];
    let mut pivots: Vec<Rational> = Vec::with_capacity(n);

    loop {
        let pivot = (0..n).find(|&i| alive[i] && !diag[i].is_zero());
        let pivot = match pivot {
            Some(i) => i,
            None => {
                let pair = (0..n)
                    .filter(|&i| alive[i])
                    .find_map(|i| rows[i].keys().find(|&&j| alive[j]).map(|&j| (i, j)));
                match pair {
                    None => break, // active block is zero
                    Some((i, j)) => {
                        merge_hyperbolic(&mut diag, &mut rows, &alive, i, j);
                        continue;
                    }
                }
            }
        };

        let d = diag[pivot].clone();
        let nbrs: Vec<(usize, Rational)> = rows[pivot]
            .iter()
            .filter(|(&j, _)| alive[j])
            .map(|(&j, v)| (j, v.clone()))
            .collect();
        // Schur complement of the pivot: A[j][l] -= A[i][j]*A[i][l]/d.
        for (a, (j, cj)) in nbrs.iter().enumerate() {
            for (l, cl) in &nbrs[a..] {
                let delta = cj * cl / &d;
                if j == l {
                    diag[*j] -= delta;
                } else {
                    sub_entry(&mut rows[*j], *l, &delta);
                    sub_entry(&mut rows[*l], *j, &delta);
                }
            }
            rows[*j].remove(&pivot);
        }
        alive[pivot] = false;
        rows[pivot].clear();
        pivots.push(d);
    }

    let degenerate = pivots.len() < n;
    let signature = pivots
        .iter()
        .map(|p| if p.is_positive() { 1 } else { -1 })
        .sum();
    let determinant = if degenerate {
        BigInt::zero()
    } else {
        let product: Rational = pivots.iter().product();
        assert!(
            product.is_integer(),
            "congruence pivots of an integer form multiply to its determinant"
        );
        product.to_integer()
    };
    let definite_sign_ok = if n.is_multiple_of(2) {
        determinant.is_positive()
    } else {
        determinant.is_negative()
    };
    let negative_definite = !degenerate && signature == -(n as i64) && (n == 0 || definite_sign_ok);
    FormInvariants {
        signature,
        determinant,
        negative_definite,
        degenerate,
    }
}

/// Congruence `e_i += e_j` in the all-zero-diagonal state: afterwards
/// `A[i][i] = 2*A[i][j] != 0` while `A[i][j]` keeps its value.
fn merge_hyperbolic(
    diag: &mut [Rational],
    rows: &mut [BTreeMap<usize, Rational>],
    alive: &[bool],
    i: usize,
    j: usize,
) {
    debug_assert!(diag[i].is_zero() && diag[j].is_zero());
    let b = rows[i][&j].clone();
    let row_j: Vec<(usize, Rational)> = rows[j]
        .iter()
        .filter(|(&l, _)| alive[l] && l != i)
        .map(|(&l, v)| (l, v.clone()))
        .collect();
    for (l, v) in row_j {
        add_entry(&mut rows[i], l, &v);
        add_entry(&mut rows[l], i, &v);
    }
    diag[i] = &b + &b;
}

fn sub_entry(row: &mut BTreeMap<usize, Rational>, col: usize, delta: &Rational) {
    let value = match row.remove(&col) {
        Some(v) => v - delta,
        None => -delta.clone(),
    };
    if !value.is_zero() {
        row.insert(col, value);
    }
}

fn add_entry(row: &mut BTreeMap<usize, Rational>, col: usize, delta: &Rational) {
    let value = match row.remove(&col) {
        Some(v) => v + delta,
        None => delta.clone(),
    };
    if !value.is_zero() {
        row.insert(col, value);
    }
}

/// The spherical Wu class of an odd-determinant form: the unique 0/1 vector
/// `w` with `w . x = x . x (mod 2)` for every basis vector `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WuClass {
    coefficients: Vec<bool>,
    self_pairing: i64,
}

impl WuClass {
    /// 0/1 coefficients in node-index order.
    pub fn coefficients(&self) -> &[bool] {
        &self.coefficients
    }

    /// Indices of the supporting nodes.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coefficients.len())
            .filter(|&i| self.coefficients[i])
            .collect()
    }

    /// `w . w` evaluated over the integers, not mod 2.
    pub fn self_pairing(&self) -> i64 {
        self.self_pairing
    }

    /// JSON form `{"bits": "0101...", "self_pairing": int}`.
    pub fn to_json(&self) -> Value {
        let bits: String = self
            .coefficients
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect();
        json!({ "bits": bits, "self_pairing": self.self_pairing })
    }
}

/// Solve for the Wu class by dense bit-packed Gauss-Jordan elimination over F2.
///
/// The system `M w = diag(M) (mod 2)` has a unique solution exactly when
/// `det M` is odd; a singular reduction therefore reports
/// [`Error::EvenDeterminant`]. The characteristic condition is re-verified on
/// the original form, and the self-pairing is computed over the integers.
pub fn wu_class(form: &IntersectionForm) -> Result<WuClass> {
    let n = form.dim();
    let words = (n + 1).div_ceil(64); // one extra bit holds the right-hand side
    let mut rows = vec![vec![0u64; words]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        for j in 0..n {
            if form.entry(i, j) & 1 == 1 {
                row[j / 64] |= 1 << (j % 64);
            }
        }
        if form.entry(i, i) & 1 == 1 {
            row[n / 64] |= 1 << (n % 64);
        }
    }

    for col in 0..n {
        let bit = |row: &[u64]| row[col / 64] >> (col % 64) & 1 == 1;
        let Some(pivot) = (col..n).find(|&r| bit(&rows[r])) else {
            return Err(Error::EvenDeterminant);
        };
        rows.swap(col, pivot);
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && bit(row) {
                for (dst, src) in row.iter_mut().zip(&pivot_row) {
                    *dst ^= src;
                }
            }
        }
    }
    // Full rank and fully reduced: row i carries the solution bit for node i.
    let coefficients: Vec<bool> = (0..n)
        .map(|i| rows[i][n / 64] >> (n % 64) & 1 == 1)
        .collect();

    // Re-check w . x = x . x (mod 2) against the original form.
    for v in 0..n {
        let pairing: i64 = (0..n)
            .filter(|&u| coefficients[u])
            .map(|u| form.entry(u, v))
            .sum();
        if (pairing - form.entry(v, v)) % 2 != 0 {
            return Err(Error::Consistency(format!(
                "solved Wu class fails the characteristic condition at node {v}"
            )));
        }
    }

    let mut self_pairing: i128 = 0;
    for (i, &ci) in coefficients.iter().enumerate() {
        if !ci {
            continue;
        }
        self_pairing += form.entry(i, i) as i128;
        for (j, &cj) in coefficients.iter().enumerate().skip(i + 1) {
            if cj {
                self_pairing += 2 * form.entry(i, j) as i128;
            }
        }
    }
    let self_pairing = i64::try_from(self_pairing)
        .map_err(|_| Error::Consistency("Wu self-pairing overflows 64 bits".into()))?;
    Ok(WuClass {
        coefficients,
        self_pairing,
    })
}

/// The Neumann-Siebenmann invariant `(signature - wu^2)/8` of a plumbing tree
/// whose form is negative definite with odd determinant.
pub fn mu_bar(tree: &PlumbingTree) -> Result<Rational> {
    let form = IntersectionForm::from_tree(tree);
    let invariants = signature_and_determinant(&form);
    if invariants.degenerate || !invariants.negative_definite {
        return Err(Error::Precondition(
            "mu-bar is only defined here for negative-definite plumbing forms".into(),
        ));
    }
    let wu = wu_class(&form)?;
    Ok(Rational::new(
        BigInt::from(invariants.signature - wu.self_pairing()),
        BigInt::from(8),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use crate::plumbing::{brieskorn_plumbing, special_family_plumbing, BrieskornParams};

    fn form(rows: &[&[i64]]) -> IntersectionForm {
        IntersectionForm::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// Cofactor expansion along the first row; the independent oracle for
    /// small determinants.
    fn det_laplace(rows: &[Vec<i64>]) -> i64 {
        let n = rows.len();
        if n == 0 {
            return 1;
        }
        let mut det = 0i64;
        for j in 0..n {
            if rows[0][j] == 0 {
                continue;
            }
            let minor: Vec<Vec<i64>> = rows[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            det += sign * rows[0][j] * det_laplace(&minor);
        }
        det
    }

    #[test]
    fn three_by_three_oracle_for_sigma_2_2_3() {
        // Plumbing of Sigma(2, 2, 3): central -1 joined to two -3 nodes.
        let tree = brieskorn_plumbing(&BrieskornParams::new(1, 1, 3).unwrap()).unwrap();
        let m = IntersectionForm::from_tree(&tree);
        assert_eq!(m.dim(), 3);
        let rows: Vec<Vec<i64>> = (0..3)
            .map(|i| (0..3).map(|j| m.entry(i, j)).collect())
            .collect();
        assert_eq!(rows, vec![vec![-1, 1, 1], vec![1, -3, 0], vec![1, 0, -3]]);

        // Hand expansion: det = -1*(9 - 0) - 1*(-3 - 0) + 1*(0 + 3) = -3,
        // and the leading principal minors -1, 2, -3 alternate in sign, so the
        // form is negative definite and the signature is -3.
        assert_eq!(det_laplace(&rows), -3);
        assert_eq!(rows[0][0], -1);
        assert_eq!(rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0], 2);

        let invariants = signature_and_determinant(&m);
        assert_eq!(invariants.signature, -3);
        assert_eq!(invariants.determinant, BigInt::from(-3));
        assert!(invariants.negative_definite);
        assert!(!invariants.degenerate);

        let wu = wu_class(&m).unwrap();
        assert_eq!(wu.support(), vec![0]);
        assert_eq!(wu.self_pairing(), -1);

        assert_eq!(mu_bar(&tree).unwrap(), rational(-1, 4));
    }

    #[test]
    fn determinant_matches_laplace_oracle_on_small_trees() {
        for (k, m, q) in [(1, 1, 3), (1, 1, 7), (1, 3, 7), (2, 1, 5)] {
            let tree = brieskorn_plumbing(&BrieskornParams::new(k, m, q).unwrap()).unwrap();
            let form = IntersectionForm::from_tree(&tree);
            if form.dim() > 9 {
                continue;
            }
            let rows: Vec<Vec<i64>> = (0..form.dim())
                .map(|i| (0..form.dim()).map(|j| form.entry(i, j)).collect())
                .collect();
            let invariants = signature_and_determinant(&form);
            assert_eq!(
                invariants.determinant,
                BigInt::from(det_laplace(&rows)),
                "(k,m,q)=({k},{m},{q})"
            );
        }
    }

    #[test]
    fn hyperbolic_blocks_contribute_balanced_pairs() {
        let invariants = signature_and_determinant(&form(&[&[0, 1], &[1, 0]]));
        assert_eq!(invariants.signature, 0);
        assert_eq!(invariants.determinant, BigInt::from(-1));
        assert!(!invariants.degenerate);
        assert!(!invariants.negative_definite);

        let invariants = signature_and_determinant(&form(&[&[0, 2], &[2, 0]]));
        assert_eq!(invariants.signature, 0);
        assert_eq!(invariants.determinant, BigInt::from(-4));

        let invariants = signature_and_determinant(&form(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -2]]));
        assert_eq!(invariants.signature, -1);
        assert_eq!(invariants.determinant, BigInt::from(2));
    }

    #[test]
    fn singular_forms_report_the_nondegenerate_part() {
        let invariants = signature_and_determinant(&form(&[&[0]]));
        assert!(invariants.degenerate);
        assert_eq!(invariants.signature, 0);
        assert_eq!(invariants.determinant, BigInt::zero());

        let invariants = signature_and_determinant(&form(&[&[1, 1], &[1, 1]]));
        assert!(invariants.degenerate);
        assert_eq!(invariants.signature, 1);
        assert_eq!(invariants.determinant, BigInt::zero());
    }

    #[test]
    fn single_vertex_forms() {
        let invariants = signature_and_determinant(&form(&[&[-2]]));
        assert_eq!(invariants.signature, -1);
        assert_eq!(invariants.determinant, BigInt::from(-2));
        assert!(invariants.negative_definite);
    }

    #[test]
    fn wu_class_requires_an_invertible_mod_two_form() {
        assert!(matches!(
            wu_class(&form(&[&[2]])),
            Err(Error::EvenDeterminant)
        ));
        assert!(matches!(
            wu_class(&form(&[&[-2, 0], &[0, -2]])),
            Err(Error::EvenDeterminant)
        ));
        // Odd determinant forms always pass: [[-2, 1], [1, -2]] has det 3 and
        // the zero vector is characteristic.
        let wu = wu_class(&form(&[&[-2, 1], &[1, -2]])).unwrap();
        assert_eq!(wu.support(), Vec::<usize>::new());
    }

    #[test]
    fn wu_class_of_even_form_is_zero() {
        // det = 8 is even; use an odd-determinant even form instead: E8-like
        // small piece [[-2, 1], [1, -4]] has det 7 and even diagonal.
        let wu = wu_class(&form(&[&[-2, 1], &[1, -4]])).unwrap();
        assert_eq!(wu.support(), Vec::<usize>::new());
        assert_eq!(wu.self_pairing(), 0);
    }

    #[test]
    fn special_family_signature_wu_and_mu_bar_constants() {
        for (k, m) in [(1u32, 1u64), (1, 3), (2, 1), (2, 3)] {
            let tree = special_family_plumbing(k, m).unwrap();
            let n = tree.node_count() as i64;
            let form = IntersectionForm::from_tree(&tree);
            let invariants = signature_and_determinant(&form);
            let two_k = 1i64 << k;
            assert_eq!(invariants.signature, -n, "(k,m)=({k},{m})");
            assert!(invariants.negative_definite);
            assert_eq!(invariants.signature, -(2 + two_k * (two_k * m as i64 + 7)));

            let wu = wu_class(&form).unwrap();
            assert_eq!(
                wu.self_pairing(),
                two_k - two_k * two_k * m as i64,
                "(k,m)=({k},{m})"
            );

            let expected = rational(-two_k * 4 - 1, 4); // -2^k - 1/4
            assert_eq!(mu_bar(&tree).unwrap(), expected, "(k,m)=({k},{m})");
        }
    }

    #[test]
    fn special_family_wu_support_is_central_plus_alternate_leg_nodes() {
        let (k, m) = (2u32, 3u64);
        let tree = special_family_plumbing(k, m).unwrap();
        let wu = wu_class(&IntersectionForm::from_tree(&tree)).unwrap();
        let mut expected = vec![0usize]; // central node
        let mut start = 1 + tree.legs()[0].len(); // skip the [-m] leg
        let run = ((1usize << k) * m as usize) - 2;
        for leg in &tree.legs()[1..] {
            // alternate -2 nodes preceding the -3: second, fourth, ... from the center
            for offset in (1..run).step_by(2) {
                expected.push(start + offset);
            }
            start += leg.len();
        }
        assert_eq!(wu.support(), expected);
    }

    #[test]
    fn blown_down_presentation_gives_the_same_mu_bar() {
        let gamma = brieskorn_plumbing(&BrieskornParams::special_family(1, 1).unwrap()).unwrap();
        assert_eq!(gamma.node_count(), 19);
        assert_eq!(mu_bar(&gamma).unwrap(), rational(-9, 4));
        let special = special_family_plumbing(1, 1).unwrap();
        assert_eq!(mu_bar(&special).unwrap(), rational(-9, 4));
    }

    #[test]
    fn mu_bar_rejects_indefinite_and_even_forms() {
        let positive = PlumbingTree::new(1, vec![]);
        assert!(matches!(mu_bar(&positive), Err(Error::Precondition(_))));
        let even = PlumbingTree::new(-2, vec![]);
        assert!(matches!(mu_bar(&even), Err(Error::EvenDeterminant)));
    }

    #[test]
    fn form_construction_validates_symmetry() {
        assert!(IntersectionForm::from_rows(vec![vec![0, 1], vec![2, 0]]).is_err());
        assert!(IntersectionForm::from_rows(vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn json_serializations() {
        let m = form(&[&[-1, 1], &[1, -3]]);
        assert_eq!(
            serde_json::to_string(&m.to_json()).unwrap(),
            r#"{"dimension":2,"entries":[-1,1,1,-3]}"#
        );
        // det = 1: unique Wu class; by hand w0 + w1 = 1, w0 = 0 gives w = (0, 1).
        let wu = wu_class(&form(&[&[-1, 1], &[1, -2]])).unwrap();
        assert_eq!(
            serde_json::to_string(&wu.to_json()).unwrap(),
            r#"{"bits":"01","self_pairing":-2}"#
        );
    }
}
