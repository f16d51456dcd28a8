//! Shift-register sequences from irreducible and primitive polynomials.

use super::gf2::Gf2Polynomial;
use crate::seq::{CyclicSequence, SequenceCode};
use crate::{Error, Result};

fn run_recursion(p: &Gf2Polynomial, init: &[u8], constant: u8) -> Vec<u8> {
    let n = p.degree() as usize;
    let mut state = init.to_vec();
    let mut out = Vec::new();
    loop {
        // next = c_1*s_{k-1} + .. + c_n*s_{k-n} (+ constant), over GF(2)
        let mut next = constant;
        for i in 1..=n {
            if p.coeff(i as u32) == 1 {
                next ^= state[n - i];
            }
        }
        out.push(state[0]);
        state.rotate_left(1);
        state[n - 1] = next;
        if state == init {
            break;
        }
    }
    out
}

fn check_init(p: &Gf2Polynomial, init: &[u8]) -> Result<()> {
    let n = p.degree();
    if init.len() != n as usize {
        return Err(Error::InitLengthMismatch { got: init.len(), degree: n });
    }
    if let Some(&bad) = init.iter().find(|&&s| s > 1) {
        return Err(Error::SymbolOutOfRange { value: bad.into(), q: 2 });
    }
    if init.iter().all(|&s| s == 0) {
        return Err(Error::ZeroInitState(n));
    }
    Ok(())
}

/// Run the plain recursion and its +1 companion.
///
/// `A` starts from `init` and runs until the initial `n`-tuple recurs (the
/// period divides `2^n - 1`; for a primitive polynomial it is exactly
/// `2^n - 1`). `B` uses the +1 recursion seeded with the complement of
/// `init`, which makes it the symbol-wise complement of `A`.
pub fn lfsr_pair(p: &Gf2Polynomial, init: &[u8]) -> Result<(CyclicSequence, CyclicSequence)> {
    if p.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    if !p.is_lfsr_shaped() {
        return Err(Error::BadPolynomialShape(p.to_string()));
    }
    if !p.is_irreducible() {
        return Err(Error::ReduciblePolynomial(p.to_string()));
    }
    check_init(p, init)?;
    // any irreducible feedback polynomial has an even number of taps
    assert!(
        p.feedback_weight() % 2 == 0,
        "irreducible {p} has odd feedback weight"
    );
    let a = run_recursion(p, init, 0);
    let binit: Vec<u8> = init.iter().map(|&s| 1 - s).collect();
    let b = if binit.iter().all(|&s| s == 0) {
        // complement of the all-ones init; the +1 recursion walks the same
        // complement cycle, entered from the all-zeros state
        let mut state = binit;
        let n = p.degree() as usize;
        let mut out = Vec::new();
        let first = state.clone();
        loop {
            let mut next = 1u8;
            for i in 1..=n {
                if p.coeff(i as u32) == 1 {
                    next ^= state[n - i];
                }
            }
            out.push(state[0]);
            state.rotate_left(1);
            state[n - 1] = next;
            if state == first {
                break;
            }
        }
        out
    } else {
        run_recursion(p, &binit, 1)
    };
    Ok((CyclicSequence::new(2, a)?, CyclicSequence::new(2, b)?))
}

/// The four-sequence covering code from a primitive polynomial whose
/// coefficients `c_1 .. c_{2R+1}` vanish: the register sequence, its
/// complement, and the all-zeros / all-ones sequences, declared as an
/// `(n + 2R + 1, R)` covering-sequence code.
pub fn lfsr_dbcsc(p: &Gf2Polynomial, r: u32) -> Result<SequenceCode> {
    let n = p.degree();
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    match p.is_primitive()? {
        true => {}
        false if !p.is_irreducible() => return Err(Error::ReduciblePolynomial(p.to_string())),
        false => return Err(Error::NotPrimitive(p.to_string())),
    }
    let span = 2 * r + 1;
    for i in 1..=span.min(n) {
        if p.coeff(i) != 0 {
            return Err(Error::CoefficientNotZero { index: i, r, span });
        }
    }
    if span >= n {
        // c_n = 1 always violates the zero-prefix requirement
        return Err(Error::CoefficientNotZero { index: n, r, span });
    }
    let mut init = vec![0u8; n as usize];
    init[n as usize - 1] = 1;
    let (a, b) = lfsr_pair(p, &init)?;
    let members = vec![
        a,
        b,
        CyclicSequence::new(2, vec![0])?,
        CyclicSequence::new(2, vec![1])?,
    ];
    SequenceCode::new(members, n + span, r)
}
