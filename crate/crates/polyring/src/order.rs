use crate::Monomial;
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

/// A monomial order on exponent vectors.
///
/// `DegRevLex` is the workbench default (it is degree-compatible, which the
/// affine-degree computation relies on); `Lex` and `Elim` exist for
/// elimination.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Pure lexicographic, first variable most significant.
    Lex,
    /// Graded reverse lexicographic.
    DegRevLex,
    /// Block elimination order: monomials are compared degrevlex on the
    /// eliminated block first, then degrevlex on the remaining variables.
    /// Any monomial involving an eliminated variable sorts above every
    /// monomial free of them.
    Elim(BTreeSet<usize>),
}

impl MonomialOrder {
    /// Elimination order for the first `k` variables.
    pub fn elim_first(k: usize) -> Self {
        MonomialOrder::Elim((0..k).collect())
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Lex => lex(a.exponents(), b.exponents()),
            MonomialOrder::DegRevLex => degrevlex(a.exponents(), b.exponents()),
            MonomialOrder::Elim(block) => {
                let pick = |m: &Monomial, inside: bool| -> Vec<u32> {
                    m.exponents()
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| block.contains(i) == inside)
                        .map(|(_, &e)| e)
                        .collect()
                };
                degrevlex(&pick(a, true), &pick(b, true))
                    .then_with(|| degrevlex(&pick(a, false), &pick(b, false)))
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    // Equal degree: the monomial with the smaller exponent in the last
    // differing position is the larger one.
    for (x, y) in a.iter().zip(b.iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
            MonomialOrder::Elim(block) => {
                write!(f, "elim(")?;
                for (n, i) in block.iter().enumerate() {
                    if n > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{i}")?;
                }
                write!(f, ")")
            }
        }
    }
}
