//! Bow diagrams as sequences of crosses and circles with a dimension on each
//! segment, and the linkage invariants `N(x_i, x_{i+1})`.

use serde_json::{json, Value};

use crate::error::QuiverError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Elem {
    Cross,
    Circle,
}

/// For a linear diagram `dims[k]` sits left of `elems[k]` and
/// `dims[k + 1]` to its right; for a cyclic one the right of the last
/// element is `dims[0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub elems: Vec<Elem>,
    pub dims: Vec<i64>,
    pub cyclic: bool,
}

impl Diagram {
    pub fn linear(elems: Vec<Elem>, dims: Vec<i64>) -> Result<Diagram, QuiverError> {
        if dims.len() != elems.len() + 1 {
            return Err(QuiverError::Dimension("a linear diagram has one more segment than elements".into()));
        }
        Ok(Diagram { elems, dims, cyclic: false })
    }

    pub fn cyclic(elems: Vec<Elem>, dims: Vec<i64>) -> Result<Diagram, QuiverError> {
        if dims.len() != elems.len() || elems.is_empty() {
            return Err(QuiverError::Dimension("a cyclic diagram has as many segments as elements".into()));
        }
        Ok(Diagram { elems, dims, cyclic: true })
    }

    fn left(&self, k: usize) -> i64 {
        self.dims[k]
    }

    fn right(&self, k: usize) -> i64 {
        self.dims[(k + 1) % self.dims.len()]
    }

    /// `N_x`: left minus right dimension at each cross, in order.
    pub fn cross_charges(&self) -> Vec<(usize, i64)> {
        (0..self.elems.len())
            .filter(|&k| self.elems[k] == Elem::Cross)
            .map(|k| (k, self.left(k) - self.right(k)))
            .collect()
    }

    /// Balanced: the dimension does not jump across any circle.
    pub fn is_balanced(&self) -> bool {
        (0..self.elems.len()).all(|k| self.elems[k] != Elem::Circle || self.left(k) == self.right(k))
    }

    /// Cobalanced: the dimension does not jump across any cross.
    pub fn is_cobalanced(&self) -> bool {
        self.cross_charges().iter().all(|&(_, n)| n == 0)
    }

    /// Exchange the circle at `k` with the cross at `k + 1`; the new middle
    /// dimension is `v_1 + v_3 + 1 − v_2`.
    pub fn hanany_witten(&self, k: usize) -> Result<Diagram, QuiverError> {
        let len = self.elems.len();
        let k1 = if self.cyclic { (k + 1) % len } else { k + 1 };
        if k1 >= len || self.elems[k] != Elem::Circle || self.elems[k1] != Elem::Cross {
            return Err(QuiverError::Inconsistent(format!("no circle-cross pair at position {k}")));
        }
        let mut out = self.clone();
        out.elems[k] = Elem::Cross;
        out.elems[k1] = Elem::Circle;
        let mid = (k + 1) % self.dims.len();
        out.dims[mid] = self.left(k) + self.right(k1) + 1 - self.dims[mid];
        Ok(out)
    }

    /// The reverse exchange of a cross at `k` with the circle at `k + 1`.
    pub fn hanany_witten_inverse(&self, k: usize) -> Result<Diagram, QuiverError> {
        let len = self.elems.len();
        let k1 = if self.cyclic { (k + 1) % len } else { k + 1 };
        if k1 >= len || self.elems[k] != Elem::Cross || self.elems[k1] != Elem::Circle {
            return Err(QuiverError::Inconsistent(format!("no cross-circle pair at position {k}")));
        }
        let mut out = self.clone();
        out.elems[k] = Elem::Circle;
        out.elems[k1] = Elem::Cross;
        let mid = (k + 1) % self.dims.len();
        out.dims[mid] = self.left(k) + self.right(k1) + 1 - self.dims[mid];
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "elems": self.elems.iter().map(|e| match e { Elem::Cross => "x", Elem::Circle => "o" }).collect::<Vec<_>>(),
            "dims": self.dims,
            "cyclic": self.cyclic,
            "invariants": linkage_invariants(self),
        })
    }
}

/// `N(x_i, x_{i+1}) = N_{x_i} − N_{x_{i+1}} + #{circles between x_i and
/// x_{i+1}}` for consecutive crosses (wrapping around in a cyclic diagram;
/// with a single cross the pair is the cross with itself).
pub fn linkage_invariants(d: &Diagram) -> Vec<i64> {
    let charges = d.cross_charges();
    let m = charges.len();
    let pairs = if d.cyclic { m } else { m.saturating_sub(1) };
    let len = d.elems.len();
    (0..pairs)
        .map(|i| {
            let (k0, n0) = charges[i];
            let (k1, n1) = charges[(i + 1) % m];
            let span = if k1 > k0 { k1 - k0 } else { k1 + len - k0 };
            let circles = (1..span).filter(|s| d.elems[(k0 + s) % len] == Elem::Circle).count() as i64;
            n0 - n1 + circles
        })
        .collect()
}
