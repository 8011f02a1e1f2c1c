//! The Hecke algebra acting on `V^n` through `R_i`, and the commuting action of
//! `U_q sl_d` through `X_i`, `Y_i`, `K_i` and the quantized `H_i`.

pub mod checks;
mod ops;
mod rotation;

pub use ops::{
    apply_rbar_word, apply_tw, casimir_classical_apply, casimir_k_part, casimir_quantized_apply, h_apply, k_apply,
    rbar_apply, x_apply, y_apply, BoundOperator, LinearOperator, OpKind,
};
pub use rotation::rotation_check;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::{rational, Rational, RingElem};
    use crate::scalar::Param;
    use crate::symgroup::Permutation;
    use crate::tensorspace::{TensorVector, Word};

    fn w(s: &[u8], d: usize) -> TensorVector {
        TensorVector::from_word(Word::new(s.to_vec(), d).unwrap(), d)
    }

    fn sym() -> Param<RingElem> {
        Param::symbolic()
    }

    #[test]
    fn rbar_table() {
        let p = sym();
        let q = RingElem::q();
        assert_eq!(rbar_apply(&p, 1, &w(&[1, 1], 2)).unwrap(), w(&[1, 1], 2).scale(&q));
        let mut e = w(&[1, 2], 2).scale(&p.q_minus_qinv());
        e.add_term(Word::new(vec![2, 1], 2).unwrap(), &RingElem::one());
        assert_eq!(rbar_apply(&p, 1, &w(&[1, 2], 2)).unwrap(), e);
        assert_eq!(rbar_apply(&p, 1, &w(&[2, 1], 2)).unwrap(), w(&[1, 2], 2));
        assert_eq!(rbar_apply(&p, 1, &w(&[2, 2], 2)).unwrap(), w(&[2, 2], 2).scale(&q));
        assert!(rbar_apply(&p, 2, &w(&[1, 2], 2)).is_err());
    }

    #[test]
    fn raising_and_lowering() {
        let p = sym();
        assert!(x_apply(&p, 1, &w(&[1, 1, 1], 2)).unwrap().is_zero());
        assert_eq!(x_apply(&p, 1, &w(&[2, 1], 2)).unwrap(), w(&[1, 1], 2));
        let mut e = w(&[2, 1], 2);
        e.add_term(Word::new(vec![1, 2], 2).unwrap(), &RingElem::q());
        assert_eq!(y_apply(&p, 1, &w(&[1, 1], 2)).unwrap(), e);
        assert!(x_apply(&p, 2, &w(&[1, 1], 2)).is_err());
    }

    #[test]
    fn diagonal_operators() {
        let p = sym();
        assert!(h_apply(&p, 1, &w(&[1, 2], 2)).unwrap().is_zero());
        assert_eq!(k_apply(&p, 1, &w(&[1, 1, 2], 2)).unwrap(), w(&[1, 1, 2], 2).scale(&RingElem::q()));
        let q_plus_q3 = &RingElem::q_pow(3) + &RingElem::q();
        assert_eq!(h_apply(&p, 1, &w(&[1, 1], 2)).unwrap(), w(&[1, 1], 2).scale(&q_plus_q3));
    }

    #[test]
    fn casimirs_on_small_vectors() {
        let x = w(&[1], 2);
        assert_eq!(casimir_quantized_apply(&sym(), &x).unwrap(), x);
        let xr = TensorVector::<Rational>::from_word(Word::new(vec![1], 2).unwrap(), 2);
        assert_eq!(casimir_classical_apply(&xr).unwrap(), xr.scale(&rational(2, 1)));
        // x(yx - xy) spans a copy of V^1 inside V^3
        let v = TensorVector::<Rational>::from_terms(
            3,
            2,
            [
                (Word::new(vec![1, 2, 1], 2).unwrap(), rational(1, 1)),
                (Word::new(vec![1, 1, 2], 2).unwrap(), rational(-1, 1)),
            ],
        )
        .unwrap();
        assert_eq!(casimir_classical_apply(&v).unwrap(), v.scale(&rational(2, 1)));
        assert!(casimir_classical_apply(&w(&[1], 3)).is_err());
        // weight 0: the K-part is q/(q+1)^2
        let at_minus_one = Param::at(rational(-1, 1)).unwrap();
        let xy = TensorVector::<Rational>::from_word(Word::new(vec![1, 2], 2).unwrap(), 2);
        assert!(casimir_quantized_apply(&at_minus_one, &xy).is_err());
        assert!(casimir_quantized_apply(&at_minus_one, &xr).is_ok());
    }

    #[test]
    fn tw_along_different_reduced_words() {
        let p = sym();
        let t13 = Permutation::from_cycles(3, "(1 3)").unwrap();
        for word in Word::all(3, 2) {
            let v = TensorVector::from_word(word, 2);
            let a = apply_rbar_word(&p, &[1, 2, 1], &v).unwrap();
            assert_eq!(a, apply_rbar_word(&p, &[2, 1, 2], &v).unwrap());
            assert_eq!(a, apply_tw(&p, &t13, &v).unwrap());
            assert_eq!(apply_tw(&p, &Permutation::identity(3), &v).unwrap(), v);
        }
        assert!(checks::classical_tw_is_permutation(3, 2).unwrap());
        assert!(apply_tw(&p, &Permutation::identity(2), &w(&[1, 1, 1], 2)).is_err());
    }

    #[test]
    fn relations_small() {
        for (n, d) in [(3, 2), (3, 3)] {
            assert!(checks::braid_relations(n, d).unwrap().passed());
            assert!(checks::hecke_relation(n, d).unwrap().passed());
            assert!(checks::self_adjoint_and_balanced(n, d).unwrap().passed());
            assert!(checks::commutant(n, d).unwrap().passed());
            assert!(checks::h_versus_k(n, d).unwrap().passed());
        }
        assert!(checks::q_commutation(3, 3).unwrap().passed());
    }

    #[test]
    fn casimir_checks() {
        let spectrum = checks::classical_casimir_spectrum(3).unwrap();
        assert!(spectrum.passed(), "{spectrum}");
        assert_eq!(checks::expected_casimir_eigenvalues(3), vec![rational(8, 1), rational(2, 1)]);
        assert!(checks::quantized_casimir(3).unwrap().passed());
        assert!(checks::casimir_limit(3).unwrap().passed());
        assert!(checks::class_sums_symmetric(3, 2).unwrap().passed());
    }

    #[test]
    fn literal_y_coproduct_breaks_commutant() {
        // Y(ab) = (Ya)b + q^{|a|} a (X b) taken literally does not commute with R_1.
        use crate::tensorspace::{FnMap, LinearMap};
        let p = sym();
        let literal = FnMap(|word: &Word| {
            let l = word.letters();
            let first = y_apply(&p, 1, &TensorVector::from_word(Word::new(vec![l[0]], 2).unwrap(), 2))?;
            let second = x_apply(&p, 1, &TensorVector::from_word(Word::new(vec![l[1]], 2).unwrap(), 2))?;
            let mut out = TensorVector::zero(2, 2);
            for (a, c) in first.iter() {
                out.add_term(Word::new(vec![a.letters()[0], l[1]], 2).unwrap(), c);
            }
            let wt = if l[0] == 1 { 1 } else { -1 };
            for (b, c) in second.iter() {
                out.add_term(Word::new(vec![l[0], b.letters()[0]], 2).unwrap(), &(c * &RingElem::q_pow(wt)));
            }
            Ok(out)
        });
        let r = LinearOperator::new(OpKind::RBar(1), 2, 2).unwrap();
        let commutes = Word::all(2, 2).into_iter().all(|word| {
            let v = TensorVector::from_word(word, 2);
            let a = literal.apply(&r.apply(&p, &v).unwrap()).unwrap();
            let b = r.apply(&p, &literal.apply(&v).unwrap()).unwrap();
            a == b
        });
        assert!(!commutes);
    }

    #[test]
    fn operator_validation() {
        assert!(LinearOperator::new(OpKind::RBar(3), 3, 2).is_err());
        assert!(LinearOperator::new(OpKind::X(2), 3, 2).is_err());
        assert!(LinearOperator::new(OpKind::CasimirQuantized, 3, 3).is_err());
        assert!(LinearOperator::new(OpKind::PermAction(Permutation::identity(2)), 3, 2).is_err());
    }
}
