//! Signature (module monomial) orders and the compatibility/termination predictor.

use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use std::cmp::Ordering;
use thiserror::Error;

/// A monomial times a canonical unit vector: `m * E_i`.
///
/// Components are 0-based internally and printed 1-based (`E1..Ed`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleMonomial {
    pub mono: Monomial,
    pub index: usize,
}

impl ModuleMonomial {
    pub fn unit(nvars: usize, index: usize) -> Self {
        ModuleMonomial {
            mono: Monomial::one(nvars),
            index,
        }
    }

    pub fn mul_mono(&self, m: &Monomial) -> Self {
        ModuleMonomial {
            mono: self.mono.mul(m),
            index: self.index,
        }
    }

    /// Same component and the monomial part divides.
    pub fn divides(&self, other: &ModuleMonomial) -> bool {
        self.index == other.index && self.mono.divides(&other.mono)
    }

    /// The cofactor `other / self` when `self` divides `other`.
    pub fn div_into(&self, other: &ModuleMonomial) -> Option<Monomial> {
        if self.index != other.index {
            return None;
        }
        self.mono.div_into(&other.mono)
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.mono.is_one() {
            format!("E{}", self.index + 1)
        } else {
            format!("{}*E{}", self.mono.format(names), self.index + 1)
        }
    }
}

impl std::fmt::Debug for ModuleMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<String> = (1..=self.mono.nvars()).map(|i| format!("x{}", i)).collect();
        write!(f, "{}", self.format(&names))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SigOrderError {
    #[error("signature order requires nonzero input polynomials (entry {0} is zero)")]
    ZeroInput(usize),
    #[error("matrix rows must have length {0} (variables plus components)")]
    BadMatrixWidth(usize),
    #[error("matrix order does not make unit signatures minimal: variable {0}")]
    NotAdmissible(usize),
}

/// A total admissible order on module monomials.
#[derive(Clone, Debug)]
pub enum SignatureOrder {
    /// Position over term: larger component index first, then the monomial order.
    Pot(MonomialOrder),
    /// Compares `a * lm(f_i)` against `b * lm(f_j)`, final tie by position.
    Schreyer {
        mord: MonomialOrder,
        lms: Vec<Monomial>,
    },
    /// The crossed-index variant: compares `a * lm(f_j)` against `b * lm(f_i)`,
    /// then `lm(f_j)` against `lm(f_i)`, final tie by position.
    SchreyerPaperLiteral {
        mord: MonomialOrder,
        lms: Vec<Monomial>,
    },
    /// Degree of `x^a f_i` first, then the monomial order, then ascending index.
    DegreeFirst { mord: MonomialOrder, degs: Vec<u32> },
    /// Degree first, then the monomial order reversed, then ascending index.
    /// The demonstration order whose regular runs need not terminate.
    DegreeReversed { mord: MonomialOrder },
    /// Weighted rows over (exponents ++ component indicator), compared top-down.
    CustomMatrix {
        rows: Vec<Vec<i64>>,
        nvars: usize,
        ncomps: usize,
    },
}

impl SignatureOrder {
    pub fn pot(mord: MonomialOrder) -> Self {
        SignatureOrder::Pot(mord)
    }

    pub fn schreyer(mord: MonomialOrder, f: &[Polynomial]) -> Result<Self, SigOrderError> {
        Ok(SignatureOrder::Schreyer {
            lms: leading_monomials(&mord, f)?,
            mord,
        })
    }

    pub fn schreyer_paper_literal(
        mord: MonomialOrder,
        f: &[Polynomial],
    ) -> Result<Self, SigOrderError> {
        Ok(SignatureOrder::SchreyerPaperLiteral {
            lms: leading_monomials(&mord, f)?,
            mord,
        })
    }

    pub fn degree_first(mord: MonomialOrder, f: &[Polynomial]) -> Result<Self, SigOrderError> {
        let degs = f
            .iter()
            .enumerate()
            .map(|(i, p)| p.total_degree().ok_or(SigOrderError::ZeroInput(i)))
            .collect::<Result<_, _>>()?;
        Ok(SignatureOrder::DegreeFirst { mord, degs })
    }

    pub fn degree_reversed(mord: MonomialOrder) -> Self {
        SignatureOrder::DegreeReversed { mord }
    }

    /// Weighted rows over `(exponents ++ component indicator)`. Validates the
    /// row width and that every variable weighs positively at its first
    /// effective row.
    pub fn custom_matrix(
        rows: Vec<Vec<i64>>,
        nvars: usize,
        ncomps: usize,
    ) -> Result<Self, SigOrderError> {
        let width = nvars + ncomps;
        if rows.is_empty() || rows.iter().any(|r| r.len() != width) {
            return Err(SigOrderError::BadMatrixWidth(width));
        }
        for j in 0..nvars {
            match rows.iter().map(|r| r[j]).find(|&w| w != 0) {
                Some(w) if w > 0 => {}
                _ => return Err(SigOrderError::NotAdmissible(j)),
            }
        }
        Ok(SignatureOrder::CustomMatrix {
            rows,
            nvars,
            ncomps,
        })
    }

    pub fn monomial_order(&self) -> &MonomialOrder {
        match self {
            SignatureOrder::Pot(m) => m,
            SignatureOrder::Schreyer { mord, .. } => mord,
            SignatureOrder::SchreyerPaperLiteral { mord, .. } => mord,
            SignatureOrder::DegreeFirst { mord, .. } => mord,
            SignatureOrder::DegreeReversed { mord } => mord,
            SignatureOrder::CustomMatrix { .. } => &MonomialOrder::Lex,
        }
    }

    /// Total comparison; `Equal` only for identical module monomials.
    pub fn compare(&self, s1: &ModuleMonomial, s2: &ModuleMonomial) -> Ordering {
        match self {
            SignatureOrder::Pot(mord) => {
                // Eq-style position rule: larger index means smaller signature.
                s2.index
                    .cmp(&s1.index)
                    .then_with(|| mord.compare(&s1.mono, &s2.mono))
            }
            SignatureOrder::Schreyer { mord, lms } => mord
                .compare(&s1.mono.mul(&lms[s1.index]), &s2.mono.mul(&lms[s2.index]))
                .then_with(|| s2.index.cmp(&s1.index)),
            SignatureOrder::SchreyerPaperLiteral { mord, lms } => mord
                .compare(&s1.mono.mul(&lms[s2.index]), &s2.mono.mul(&lms[s1.index]))
                .then_with(|| mord.compare(&lms[s2.index], &lms[s1.index]))
                .then_with(|| s2.index.cmp(&s1.index)),
            SignatureOrder::DegreeFirst { mord, degs } => {
                let d1 = s1.mono.degree() + degs[s1.index];
                let d2 = s2.mono.degree() + degs[s2.index];
                d1.cmp(&d2)
                    .then_with(|| mord.compare(&s1.mono, &s2.mono))
                    .then_with(|| s1.index.cmp(&s2.index))
            }
            SignatureOrder::DegreeReversed { mord } => s1
                .mono
                .degree()
                .cmp(&s2.mono.degree())
                .then_with(|| mord.compare(&s1.mono, &s2.mono).reverse())
                .then_with(|| s1.index.cmp(&s2.index)),
            SignatureOrder::CustomMatrix {
                rows,
                nvars,
                ncomps,
            } => {
                let dot = |s: &ModuleMonomial, row: &[i64]| -> i64 {
                    let mut acc: i64 = row
                        .iter()
                        .zip(s.mono.exponents())
                        .map(|(w, &e)| w * e as i64)
                        .sum();
                    acc += row[nvars + s.index];
                    acc
                };
                for row in rows {
                    match dot(s1, row).cmp(&dot(s2, row)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                let _ = ncomps;
                // Deterministic completion when the rows do not separate.
                s2.index
                    .cmp(&s1.index)
                    .then_with(|| s1.mono.exponents().cmp(s2.mono.exponents()))
            }
        }
    }

    pub fn max<'a>(&self, a: &'a ModuleMonomial, b: &'a ModuleMonomial) -> &'a ModuleMonomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn leading_monomials(
    mord: &MonomialOrder,
    f: &[Polynomial],
) -> Result<Vec<Monomial>, SigOrderError> {
    let _ = mord; // polynomials are kept normalized under the active order
    f.iter()
        .enumerate()
        .map(|(i, p)| {
            p.leading_monomial()
                .cloned()
                .ok_or(SigOrderError::ZeroInput(i))
        })
        .collect()
}

/// Index-major, degree-minor preorder on (component, total degree of the
/// polynomial part): a larger index or a smaller degree means smaller.
/// `Equal` identifies the whole preorder class.
pub fn f5_compare(index1: usize, deg1: u32, index2: usize, deg2: u32) -> Ordering {
    index2.cmp(&index1).then(deg1.cmp(&deg2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompatibilityStatus {
    Compatible,
    AlmostCompatible,
    NotAlmostCompatible,
    Unknown,
}

/// Outcome of the order-compatibility analysis, with a human-readable reason.
#[derive(Clone, Debug)]
pub struct CompatibilityVerdict {
    pub status: CompatibilityStatus,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TerminationPrediction {
    Terminates,
    MayNotTerminate,
    Unknown,
}

/// Decides, per signature-order family, how the component restrictions of the
/// signature order relate to the monomial order.
pub fn check_compatibility(
    mord: &MonomialOrder,
    sord: &SignatureOrder,
    nvars: usize,
    ncomps: usize,
) -> CompatibilityVerdict {
    use CompatibilityStatus::*;
    match sord {
        SignatureOrder::Pot(_) => CompatibilityVerdict {
            status: Compatible,
            detail: "position-over-term: every component restriction equals the monomial order"
                .into(),
        },
        SignatureOrder::Schreyer { .. } | SignatureOrder::SchreyerPaperLiteral { .. } => {
            CompatibilityVerdict {
                status: Compatible,
                detail:
                    "weighted by fixed leading monomials: component restrictions cancel the weight"
                        .into(),
            }
        }
        SignatureOrder::DegreeFirst { .. } => {
            if nvars <= 1 || mord.is_graded() {
                CompatibilityVerdict {
                    status: Compatible,
                    detail:
                        "degree-first restriction coincides with a degree-graded monomial order"
                            .into(),
                }
            } else if ncomps <= 1 {
                CompatibilityVerdict {
                    status: AlmostCompatible,
                    detail: "single component: the sink condition is vacuous".into(),
                }
            } else {
                CompatibilityVerdict {
                    status: NotAlmostCompatible,
                    detail:
                        "every component restriction is degree-graded but the monomial order is not"
                            .into(),
                }
            }
        }
        SignatureOrder::DegreeReversed { .. } => {
            if nvars <= 1 {
                CompatibilityVerdict {
                    status: Compatible,
                    detail: "one variable: each degree class is a single monomial".into(),
                }
            } else if ncomps <= 1 {
                CompatibilityVerdict {
                    status: AlmostCompatible,
                    detail: "single component: the sink condition is vacuous".into(),
                }
            } else {
                CompatibilityVerdict {
                    status: NotAlmostCompatible,
                    detail:
                        "component restrictions reverse the monomial order inside every degree class"
                            .into(),
                }
            }
        }
        SignatureOrder::CustomMatrix { rows, nvars: n, .. } => {
            let component_blind = rows.iter().all(|r| r[*n..].iter().all(|&w| w == 0));
            if component_blind {
                let exp_rows: Vec<Vec<i64>> = rows.iter().map(|r| r[..*n].to_vec()).collect();
                if exp_rows == mord.canonical_matrix(*n) {
                    return CompatibilityVerdict {
                        status: Compatible,
                        detail: "component-blind matrix identical to the monomial order".into(),
                    };
                }
            }
            CompatibilityVerdict {
                status: Unknown,
                detail: "matrix order not expressible as a component-uniform block of the monomial order"
                    .into(),
            }
        }
    }
}

/// Maps a compatibility verdict to the guaranteed-termination prediction.
pub fn predict_termination(verdict: &CompatibilityVerdict) -> TerminationPrediction {
    match verdict.status {
        CompatibilityStatus::Compatible | CompatibilityStatus::AlmostCompatible => {
            TerminationPrediction::Terminates
        }
        CompatibilityStatus::NotAlmostCompatible => TerminationPrediction::MayNotTerminate,
        CompatibilityStatus::Unknown => TerminationPrediction::Unknown,
    }
}
