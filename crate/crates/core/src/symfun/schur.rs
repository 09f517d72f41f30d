//! Schur polynomials via Jacobi-Trudi determinants, and conversion into
//! the Schur basis by unitriangular elimination.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::partition::Partition;

use super::{e, h, SymPoly};

/// The Schur polynomial `s_lambda` in n variables.
///
/// Computed as the Jacobi-Trudi determinant in the h basis, or its dual
/// in the e basis when the conjugate shape has fewer rows. Single rows
/// and columns short-circuit to `h_k` and `e_k`.
pub fn schur(lambda: &Partition, n: usize) -> SymPoly {
    if lambda.len() > n {
        return SymPoly::zero(n);
    }
    if lambda.is_empty() {
        return SymPoly::one(n);
    }
    if lambda.len() == 1 {
        return h(lambda.parts()[0] as u64, n);
    }
    if lambda.parts()[0] == 1 {
        return e(lambda.len() as u64, n);
    }
    let conj = lambda.conjugate();
    if lambda.len() <= conj.len() {
        jacobi_trudi(lambda.parts(), n, h)
    } else {
        jacobi_trudi(conj.parts(), n, e)
    }
}

/// Determinant of `(gen(parts[i] - i + j))_{i,j}` by dynamic programming
/// over column subsets.
fn jacobi_trudi(parts: &[u32], n: usize, gen: fn(u64, usize) -> SymPoly) -> SymPoly {
    let l = parts.len();
    let mut entries: HashMap<i64, SymPoly> = HashMap::new();
    let mut entry = |m: i64| -> SymPoly {
        if m < 0 {
            return SymPoly::zero(n);
        }
        entries
            .entry(m)
            .or_insert_with(|| gen(m as u64, n))
            .clone()
    };
    let full = (1usize << l) - 1;
    let mut dp: Vec<Option<SymPoly>> = vec![None; full + 1];
    dp[0] = Some(SymPoly::one(n));
    for mask in 0..full {
        let Some(partial) = dp[mask].take() else {
            continue;
        };
        let row = mask.count_ones() as usize;
        for j in 0..l {
            if mask & (1 << j) != 0 {
                continue;
            }
            let m = parts[row] as i64 - row as i64 + j as i64;
            let cell = entry(m);
            if cell.is_zero() {
                continue;
            }
            let mut term = partial.mul(&cell).expect("same variable count");
            // sign flips once per used column above j
            if (mask >> (j + 1)).count_ones() % 2 == 1 {
                term = term.neg();
            }
            let slot = &mut dp[mask | (1 << j)];
            *slot = Some(match slot.take() {
                Some(acc) => acc.add(&term).expect("same variable count"),
                None => term,
            });
        }
    }
    dp[full].take().unwrap_or_else(|| SymPoly::zero(n))
}

/// Expands a symmetric polynomial in the Schur basis.
///
/// Works degree by degree: repeatedly strip the dominance-maximal
/// monomial term and subtract that multiple of the corresponding Schur
/// polynomial. The result is exact because `s_lambda = m_lambda +
/// (dominance-lower terms)`; the monomial-basis representation keeps the
/// input symmetric by construction, so the elimination always clears.
pub fn to_schur(f: &SymPoly) -> BTreeMap<Partition, BigInt> {
    let n = f.num_vars();
    let mut out = BTreeMap::new();
    let mut cache: HashMap<Partition, SymPoly> = HashMap::new();
    for (_, mut component) in f.homogeneous_components() {
        while let Some((lambda, c)) = component.leading_term() {
            let s = cache
                .entry(lambda.clone())
                .or_insert_with(|| schur(&lambda, n));
            component = component
                .sub(&s.scalar_mul(&c))
                .expect("same variable count");
            out.insert(lambda, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::symfun::m;
    use num_traits::One;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn single_row_and_column() {
        for n in 1..=4 {
            for k in 0..=4u64 {
                assert_eq!(schur(&pt(&[k.max(1) as u32]), n), h(k.max(1), n));
                assert_eq!(schur(&pt(&vec![1; k.max(1) as usize]), n), e(k.max(1), n));
            }
        }
    }

    #[test]
    fn hook_shape_in_three_vars() {
        // s_(2,1) = m_(2,1) + 2 m_(1,1,1)
        let expected = m(&pt(&[2, 1]), 3)
            .add(&m(&pt(&[1, 1, 1]), 3).scalar_mul(&BigInt::from(2)))
            .unwrap();
        assert_eq!(schur(&pt(&[2, 1]), 3), expected);
    }

    #[test]
    fn vanishes_when_too_long() {
        assert!(schur(&pt(&[2, 1, 1]), 2).is_zero());
    }

    #[test]
    fn h_and_e_forms_agree() {
        for k in 2..=6u32 {
            for lambda in partitions_of(k) {
                if lambda.is_empty() {
                    continue;
                }
                let n = k as usize;
                let via_h = jacobi_trudi(lambda.parts(), n, h);
                let via_e = jacobi_trudi(lambda.conjugate().parts(), n, e);
                assert_eq!(via_h, via_e, "lambda={lambda}");
            }
        }
    }

    #[test]
    fn monomial_expansion_is_unitriangular() {
        for k in 1..=6u32 {
            for lambda in partitions_of(k) {
                let s = schur(&lambda, k as usize);
                assert!(s.coeff(&lambda).is_one());
                assert_eq!(s.leading_term().unwrap().0, lambda);
                assert!(s
                    .terms()
                    .values()
                    .all(|c| c > &BigInt::from(0)));
            }
        }
    }

    #[test]
    fn schur_at_ones_counts_tableaux() {
        // hook content formula values
        assert_eq!(schur(&pt(&[2, 1]), 3).eval_ones(), BigInt::from(8));
        assert_eq!(schur(&pt(&[2, 2]), 2).eval_ones(), BigInt::one());
        assert_eq!(schur(&pt(&[2, 2]), 3).eval_ones(), BigInt::from(6));
    }

    #[test]
    fn to_schur_inverts_basis_elements() {
        for k in 1..=6u64 {
            let n = k as usize;
            let hk = to_schur(&h(k, n));
            assert_eq!(hk.len(), 1);
            assert_eq!(hk[&pt(&[k as u32])], BigInt::one());
            let ek = to_schur(&e(k, n));
            assert_eq!(ek.len(), 1);
            assert_eq!(ek[&pt(&vec![1; k as usize])], BigInt::one());
        }
    }

    #[test]
    fn to_schur_round_trips_random_combinations() {
        let n = 5;
        let f = schur(&pt(&[3, 1]), n)
            .scalar_mul(&BigInt::from(4))
            .add(&schur(&pt(&[2, 2]), n).scalar_mul(&BigInt::from(-7)))
            .unwrap()
            .add(&schur(&pt(&[2, 1, 1]), n))
            .unwrap();
        let coeffs = to_schur(&f);
        assert_eq!(coeffs[&pt(&[3, 1])], BigInt::from(4));
        assert_eq!(coeffs[&pt(&[2, 2])], BigInt::from(-7));
        assert_eq!(coeffs[&pt(&[2, 1, 1])], BigInt::one());
        assert_eq!(coeffs.len(), 3);
    }

    #[test]
    fn to_schur_handles_mixed_degrees() {
        let f = h(3, 4).add(&e(2, 4).scalar_mul(&BigInt::from(5))).unwrap();
        let coeffs = to_schur(&f);
        assert_eq!(coeffs[&pt(&[3])], BigInt::one());
        assert_eq!(coeffs[&pt(&[1, 1])], BigInt::from(5));
    }
}
