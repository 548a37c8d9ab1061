//! Generator names. Indices are 1-based, matching the printed notation.

use std::fmt;

use crate::rep::Family;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Gen {
    /// Simple transposition `s_i = s_{i,i+1}`.
    S(usize),
    /// Transposition `s_{ij}`.
    Sij(usize, usize),
    T(usize),
    Tinv(usize),
    X(usize),
    Xinv(usize),
    Y(usize),
    Yinv(usize),
    /// Degenerate `y_i`, acting as the trigonometric Dunkl operator.
    Ylow(usize),
    Pi,
    PiInv,
    PiMinus,
    /// Rational Dunkl operator.
    Dunkl(usize),
    Dtrig(usize),
    /// Dunkl–Opdam operator.
    DO(usize),
    Sigma(usize),
    /// `D_i^{(l)}`.
    Dl(usize),
    Omega,
    OmegaInv,
    Tau(usize),
}

impl Gen {
    /// The inverse, when it is itself one of the tags.
    pub fn inverse(self) -> Option<Gen> {
        use Gen::*;
        Some(match self {
            S(i) => S(i),
            Sij(i, j) => Sij(i, j),
            T(i) => Tinv(i),
            Tinv(i) => T(i),
            X(i) => Xinv(i),
            Xinv(i) => X(i),
            Y(i) => Yinv(i),
            Yinv(i) => Y(i),
            Pi => PiInv,
            PiInv => Pi,
            Omega => OmegaInv,
            OmegaInv => Omega,
            _ => return None,
        })
    }

    pub fn allowed_in(self, family: Family) -> bool {
        use Gen::*;
        match self {
            S(_) | Sij(..) | X(_) | Xinv(_) => true,
            T(_) | Tinv(_) | Y(_) | Yinv(_) | Omega | OmegaInv | Tau(_) => family == Family::Daha,
            Pi | PiInv | PiMinus | Dl(_) => matches!(family, Family::Daha | Family::DegDaha),
            Ylow(_) | Dtrig(_) | Dunkl(_) => family == Family::DegDaha,
            DO(_) | Sigma(_) => family == Family::CycRat,
        }
    }

    pub fn index_valid(self, n: usize) -> bool {
        use Gen::*;
        let r = 1..=n;
        match self {
            S(i) | T(i) | Tinv(i) => i >= 1 && i < n,
            Sij(i, j) => i != j && r.contains(&i) && r.contains(&j),
            X(i) | Xinv(i) | Y(i) | Yinv(i) | Ylow(i) | Dunkl(i) | Dtrig(i) | DO(i) | Sigma(i) | Dl(i)
            | Tau(i) => r.contains(&i),
            Pi | PiInv | PiMinus | Omega | OmegaInv => n >= 1,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Gen::*;
        match self {
            S(i) => write!(f, "s{i}"),
            Sij(i, j) => write!(f, "s{i}_{j}"),
            T(i) => write!(f, "T{i}"),
            Tinv(i) => write!(f, "T{i}^-1"),
            X(i) => write!(f, "X{i}"),
            Xinv(i) => write!(f, "X{i}^-1"),
            Y(i) => write!(f, "Y{i}"),
            Yinv(i) => write!(f, "Y{i}^-1"),
            Ylow(i) => write!(f, "y{i}"),
            Pi => write!(f, "pi"),
            PiInv => write!(f, "pi^-1"),
            PiMinus => write!(f, "pi-"),
            Dunkl(i) => write!(f, "D{i}"),
            Dtrig(i) => write!(f, "Dtrig{i}"),
            DO(i) => write!(f, "DO{i}"),
            Sigma(i) => write!(f, "sigma{i}"),
            Dl(i) => write!(f, "D{i}^(l)"),
            Omega => write!(f, "omega"),
            OmegaInv => write!(f, "omega^-1"),
            Tau(i) => write!(f, "tau{i}"),
        }
    }
}
