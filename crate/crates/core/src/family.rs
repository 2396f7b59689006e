use crate::error::StructureError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum GraphKind {
    Cycle,
    Path,
}

impl GraphKind {
    pub fn min_order(self) -> usize {
        match self {
            GraphKind::Cycle => 3,
            GraphKind::Path => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Cycle => "cycle",
            GraphKind::Path => "path",
        }
    }
}

/// A cycle `C_n` or a path `P_n`; vertices are `0..n` internally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphFamily {
    kind: GraphKind,
    n: usize,
}

impl GraphFamily {
    pub fn new(kind: GraphKind, n: usize) -> Result<Self, StructureError> {
        if n < kind.min_order() {
            return Err(StructureError::InvalidSize(n));
        }
        Ok(GraphFamily { kind, n })
    }

    pub fn cycle(n: usize) -> Result<Self, StructureError> {
        Self::new(GraphKind::Cycle, n)
    }

    pub fn path(n: usize) -> Result<Self, StructureError> {
        Self::new(GraphKind::Path, n)
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_cycle(&self) -> bool {
        self.kind == GraphKind::Cycle
    }

    pub fn degree(&self, v: usize) -> u64 {
        match self.kind {
            GraphKind::Cycle => 2,
            GraphKind::Path if v == 0 || v + 1 == self.n => 1,
            GraphKind::Path => 2,
        }
    }

    /// Neighbours of `v`, at most two. On `C_3` the two neighbours are distinct.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        let n = self.n;
        let (a, b) = match self.kind {
            GraphKind::Cycle => (Some((v + n - 1) % n), Some((v + 1) % n)),
            GraphKind::Path => (v.checked_sub(1), if v + 1 < n { Some(v + 1) } else { None }),
        };
        a.into_iter().chain(b)
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.neighbors(u).any(|w| w == v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn adjacency() {
        let c = GraphFamily::cycle(5).unwrap();
        assert_eq!(c.neighbors(0).collect::<Vec<_>>(), [4, 1]);
        assert!(c.are_adjacent(4, 0));
        let p = GraphFamily::path(4).unwrap();
        assert_eq!(p.neighbors(0).collect::<Vec<_>>(), [1]);
        assert_eq!(p.neighbors(3).collect::<Vec<_>>(), [2]);
        assert!(!p.are_adjacent(3, 0));
        assert_eq!(p.degree(0), 1);
        assert_eq!(p.degree(1), 2);
    }

    #[test]
    fn size_limits() {
        assert!(GraphFamily::cycle(2).is_err());
        assert!(GraphFamily::path(1).is_err());
        assert!(GraphFamily::path(2).is_ok());
    }
}
