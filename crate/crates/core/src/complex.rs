//! Explicit simplicial complexes and the independence complex of a graph.
//!
//! Faces are stored by dimension as sorted tuples of vertex positions.
//! The empty face is implicit in every non-void complex, so the complex
//! `{∅}` (the sphere of dimension -1) and the void complex are distinct
//! values.

use crate::bitset::VertexSet;
use crate::config::Budgets;
use crate::graph::Graph;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TopologyError {
    #[error("face budget exceeded: more than {0} faces")]
    FaceBudgetExceeded(usize),
    #[error("matrix budget exceeded: more than {0} boundary entries")]
    MatrixBudgetExceeded(usize),
    #[error("torsion coefficient does not fit in u64")]
    TorsionOverflow,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Complex {
    labels: Vec<u32>,
    /// `faces[d]` lists the d-dimensional faces as ascending position
    /// tuples, lexicographically sorted, empty trailing dims trimmed.
    faces: Vec<Vec<Vec<u32>>>,
    void: bool,
}

impl Complex {
    /// The complex `{∅}`, i.e. the (-1)-sphere.
    pub fn empty() -> Self {
        Complex {
            labels: Vec::new(),
            faces: Vec::new(),
            void: false,
        }
    }

    /// The void complex: no faces at all, not even the empty one.
    pub fn void() -> Self {
        Complex {
            labels: Vec::new(),
            faces: Vec::new(),
            void: true,
        }
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    /// Highest dimension carrying a face; `None` for void and for `{∅}`.
    pub fn dim(&self) -> Option<usize> {
        if self.faces.is_empty() {
            None
        } else {
            Some(self.faces.len() - 1)
        }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn faces_of_dim(&self, d: usize) -> &[Vec<u32>] {
        self.faces.get(d).map_or(&[], |v| v.as_slice())
    }

    /// Number of faces per dimension, starting at dimension 0.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(|fs| fs.len()).collect()
    }

    pub fn total_faces(&self) -> usize {
        self.faces.iter().map(|fs| fs.len()).sum()
    }

    /// Alternating sum over all faces including the empty one.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        if self.void {
            return 0;
        }
        let mut chi: i64 = -1; // the empty face, degree -1
        for (d, fs) in self.faces.iter().enumerate() {
            let sign = if d % 2 == 0 { 1 } else { -1 };
            chi += sign * fs.len() as i64;
        }
        chi
    }

    /// Downward closure of the given faces (positions into `labels`).
    pub fn from_maximal_faces(labels: Vec<u32>, maximal: &[Vec<u32>]) -> Self {
        let mut by_dim: Vec<BTreeSet<Vec<u32>>> = Vec::new();
        for face in maximal {
            let mut f = face.clone();
            f.sort_unstable();
            f.dedup();
            let k = f.len();
            // every nonempty subset
            for mask in 1u64..1 << k {
                let sub: Vec<u32> = (0..k)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| f[i])
                    .collect();
                let d = sub.len() - 1;
                while by_dim.len() <= d {
                    by_dim.push(BTreeSet::new());
                }
                by_dim[d].insert(sub);
            }
        }
        Complex {
            labels,
            faces: by_dim
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect(),
            void: false,
        }
    }

    /// The independence complex: faces are the independent vertex sets of
    /// `g`. The empty graph yields `{∅}`. Fails when the number of faces
    /// exceeds the face budget.
    pub fn independence(g: &Graph, budgets: &Budgets) -> Result<Self, TopologyError> {
        let n = g.n();
        let mut faces: Vec<Vec<Vec<u32>>> = Vec::new();
        let mut count = 0usize;
        let mut current: Vec<u32> = Vec::new();
        // `allowed` = vertices not adjacent to anything in `current`.
        fn rec(
            g: &Graph,
            start: usize,
            allowed: &VertexSet,
            current: &mut Vec<u32>,
            faces: &mut Vec<Vec<Vec<u32>>>,
            count: &mut usize,
            cap: usize,
        ) -> Result<(), TopologyError> {
            for v in allowed.iter() {
                if v < start {
                    continue;
                }
                current.push(v as u32);
                *count += 1;
                if *count > cap {
                    return Err(TopologyError::FaceBudgetExceeded(cap));
                }
                let d = current.len() - 1;
                if faces.len() <= d {
                    faces.push(Vec::new());
                }
                faces[d].push(current.clone());
                let mut next = allowed.clone();
                next.subtract(g.adj_row(v));
                next.remove(v);
                rec(g, v + 1, &next, current, faces, count, cap)?;
                current.pop();
            }
            Ok(())
        }
        rec(
            g,
            0,
            &VertexSet::full(n),
            &mut current,
            &mut faces,
            &mut count,
            budgets.max_faces,
        )?;
        Ok(Complex {
            labels: g.labels().to_vec(),
            faces,
            void: false,
        })
    }

    /// Simplicial join on disjoint vertex sets; the right operand's labels
    /// are offset past the left's. `{∅}` is the identity.
    pub fn join(&self, other: &Complex, budgets: &Budgets) -> Result<Complex, TopologyError> {
        if self.void || other.void {
            return Ok(Complex::void());
        }
        let offset = self.labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|&l| l + offset));
        let shift = self.labels.len() as u32;

        let left: Vec<&Vec<u32>> = self.faces.iter().flatten().collect();
        let right: Vec<&Vec<u32>> = other.faces.iter().flatten().collect();
        let empty: Vec<u32> = Vec::new();

        let total = (left.len() + 1) * (right.len() + 1) - 1;
        if total > budgets.max_faces {
            return Err(TopologyError::FaceBudgetExceeded(budgets.max_faces));
        }

        let mut faces: Vec<Vec<Vec<u32>>> = Vec::new();
        let mut push = |sigma: &Vec<u32>, tau: &Vec<u32>| {
            if sigma.is_empty() && tau.is_empty() {
                return;
            }
            let mut face = sigma.clone();
            face.extend(tau.iter().map(|&i| i + shift));
            let d = face.len() - 1;
            while faces.len() <= d {
                faces.push(Vec::new());
            }
            faces[d].push(face);
        };
        for sigma in std::iter::once(&empty).chain(left.iter().copied()) {
            push(sigma, &empty);
            for tau in &right {
                push(sigma, tau);
            }
        }
        for fs in &mut faces {
            fs.sort_unstable();
        }
        Ok(Complex {
            labels,
            faces,
            void: false,
        })
    }

    /// One face per line (space-separated labels), dimension-sorted.
    pub fn render_faces(&self) -> String {
        let mut out = String::new();
        for fs in &self.faces {
            for face in fs {
                let line: Vec<String> = face
                    .iter()
                    .map(|&i| self.labels[i as usize].to_string())
                    .collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
        }
        out
    }
}
