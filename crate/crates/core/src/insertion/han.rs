use super::trace::{renames, Substitution, Trace};
use super::{check_label, rename, shift_pairs, InsertionCase, InversionResult};
use crate::error::{Error, Result};
use crate::labeling;
use crate::stats;
use crate::word::Permutation;

/// Han's insertion: `den` grows by `c`, `exc` grows exactly when
/// `c > exc(π)`, and the greatest grande-fixed place of the image is the
/// target index (or `n` when `c = 0`).
pub fn phi_han(pi: &Permutation, c: usize) -> Result<(Permutation, InsertionCase)> {
    phi_han_traced(pi, c, &mut Trace::off())
}

pub(crate) fn phi_han_traced(
    pi: &Permutation,
    c: usize,
    trace: &mut Trace,
) -> Result<(Permutation, InsertionCase)> {
    let n = pi.n() + 1;
    check_label(c, n)?;
    if c == 0 {
        let mut out = pi.to_vec();
        out.push(n as u32);
        trace.record(
            || format!("append {n}"),
            pi,
            &out,
            || {
                vec![Substitution::Insert {
                    position: n,
                    letter: n as u32,
                }]
            },
        );
        return Ok((Permutation::from_vec_unchecked(out), InsertionCase::Append));
    }

    let lab = labeling::den_labeling(pi);
    let x = lab.space_of_label(c)?;
    let letter = lab.insertion_letter(x).unwrap();
    let mut chain = stats::excedance_letters(pi);
    chain.push(n as u32);
    let y = chain.iter().position(|&e| e == letter).unwrap();

    let pairs = shift_pairs(&chain, y);
    let mut shifted = pi.to_vec();
    rename(&mut shifted, &pairs);
    trace.record(
        || {
            format!(
                "replace excedance letters from e_{} upward by their successors",
                y + 1
            )
        },
        pi,
        &shifted,
        || renames(&pairs),
    );

    let mut out = shifted.clone();
    out.insert(x - 1, letter);
    trace.record(
        || format!("insert {letter} immediately before index {x}"),
        &shifted,
        &out,
        || {
            vec![Substitution::Insert {
                position: x,
                letter,
            }]
        },
    );
    Ok((
        Permutation::from_vec_unchecked(out),
        InsertionCase::Han { x, letter },
    ))
}

/// Inverse of [`phi_han`], keyed on the greatest grande-fixed place.
pub fn phi_han_inverse(tau: &Permutation) -> Result<InversionResult> {
    let n = tau.n();
    if n == 0 {
        return Err(Error::WrongCase {
            map: "phi_han_inverse",
            detail: "empty permutation has no preimage".into(),
        });
    }
    if tau.at(n) as usize == n {
        let pi = Permutation::from_vec_unchecked(tau[..n - 1].to_vec());
        return Ok(InversionResult {
            pi,
            c: 0,
            case: Some(InsertionCase::Append),
        });
    }

    let wrong = |detail: String| Error::WrongCase {
        map: "phi_han_inverse",
        detail,
    };
    let x = stats::greatest_grande_fixed_place(tau)
        .ok_or_else(|| wrong(format!("{} has no grande-fixed place", tau.compact())))?;
    let letter = tau.at(x);
    let mut rest = tau.to_vec();
    rest.remove(x - 1);

    // The excedance letters above the inserted one were each shifted up by
    // one step of the chain; walk them back down.
    let above: Vec<u32> = stats::excedance_letters(&rest)
        .into_iter()
        .filter(|&e| e > letter)
        .collect();
    let mut pairs = Vec::with_capacity(above.len());
    let mut prev = letter;
    for &g in &above {
        pairs.push((g, prev));
        prev = g;
    }
    rename(&mut rest, &pairs);
    let pi = Permutation::new(rest).map_err(|e| wrong(e.to_string()))?;
    let c = stats::den(tau)
        .checked_sub(stats::den(&pi))
        .ok_or_else(|| wrong(format!("den decreased on {}", tau.compact())))?;
    debug_assert_eq!(labeling::den_labeling(&pi).label_of_space(x), c);
    Ok(InversionResult {
        pi,
        c,
        case: Some(InsertionCase::Han { x, letter }),
    })
}
