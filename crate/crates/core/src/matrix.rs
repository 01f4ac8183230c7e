//! Small dense integer matrices; these carry the Weyl group action on
//! root-basis coordinates, so rank never exceeds 8 and entries stay tiny.

/// Square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn is_identity(&self) -> bool {
        self.data
            .iter()
            .enumerate()
            .all(|(k, &v)| v == if k / self.n == k % self.n { 1 } else { 0 })
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        debug_assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }

    /// Applies the matrix to an integer column vector.
    pub fn apply_int(&self, v: &[i64]) -> Vec<i64> {
        debug_assert_eq!(self.n, v.len());
        let n = self.n;
        let mut out = vec![0i64; n];
        for i in 0..n {
            let mut acc = 0;
            for j in 0..n {
                acc += self.get(i, j) * v[j];
            }
            out[i] = acc;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_multiplies() {
        let id = IntMatrix::identity(3);
        let mut m = IntMatrix::zero(3);
        for i in 0..3 {
            for j in 0..3 {
                m.set(i, j, (i * 3 + j) as i64);
            }
        }
        assert_eq!(id.mul(&m), m);
        assert_eq!(m.mul(&id), m);
        assert!(id.is_identity());
        assert!(!m.is_identity());
    }

    #[test]
    fn apply_vector() {
        let mut m = IntMatrix::zero(2);
        m.set(0, 0, 2);
        m.set(0, 1, -1);
        m.set(1, 1, 1);
        assert_eq!(m.apply_int(&[3, 4]), vec![2, 4]);
    }
}
