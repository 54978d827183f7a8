use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
    #[error("images of length {got} do not form a bijection on {degree} points")]
    NotBijective { got: usize, degree: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

/// A permutation of `{0, .., degree-1}` stored as an image table.
///
/// Points are 0-based internally; the text format (cycle notation) is
/// 1-based and the conversion happens only in `parse`/`Display`.
/// Composition is left-to-right: `p^(a*b) = (p^a)^b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    imgs: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            imgs: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image table, validating bijectivity.
    pub fn from_images(imgs: Vec<u32>) -> Result<Self, PermError> {
        let n = imgs.len();
        let mut seen = vec![false; n];
        for &x in &imgs {
            if x as usize >= n || seen[x as usize] {
                return Err(PermError::NotBijective { got: n, degree: n });
            }
            seen[x as usize] = true;
        }
        Ok(Perm { imgs })
    }

    pub fn degree(&self) -> usize {
        self.imgs.len()
    }

    #[inline]
    pub fn apply(&self, p: u32) -> u32 {
        self.imgs[p as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.imgs
    }

    pub fn is_identity(&self) -> bool {
        self.imgs.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Left-to-right composition: apply `self` first, then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            imgs: self.imgs.iter().map(|&x| other.imgs[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.imgs.len()];
        for (i, &x) in self.imgs.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { imgs: inv }
    }

    /// Conjugate: `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Perm) -> Perm {
        let mut imgs = vec![0u32; self.imgs.len()];
        for i in 0..self.imgs.len() {
            imgs[other.imgs[i] as usize] = other.imgs[self.imgs[i] as usize];
        }
        Perm { imgs }
    }

    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    /// Least k >= 1 with self^k = identity; the lcm of the cycle lengths.
    pub fn order(&self) -> u128 {
        let mut ord: u128 = 1;
        let mut seen = vec![false; self.imgs.len()];
        for start in 0..self.imgs.len() {
            if seen[start] {
                continue;
            }
            let mut len: u128 = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.imgs[p] as usize;
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut acc = Perm::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    pub fn moves(&self, p: u32) -> bool {
        self.imgs[p as usize] != p
    }

    pub fn least_moved_point(&self) -> Option<u32> {
        self.imgs
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    pub fn moved_points(&self) -> impl Iterator<Item = u32> + '_ {
        self.imgs
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    /// Nontrivial cycles, each rotated to start at its least point,
    /// sorted by least point. Points are 0-based here.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.imgs.len()];
        let mut out = Vec::new();
        for start in 0..self.imgs.len() {
            if seen[start] || self.imgs[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cyc.push(p as u32);
                p = self.imgs[p] as usize;
            }
            out.push(cyc);
        }
        out
    }

    /// Parses whitespace-tolerant disjoint-cycle notation with 1-based
    /// points. `"()"` or an all-whitespace string is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self, PermError> {
        let mut imgs: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let mut chars = text.chars().peekable();
        let mut any = false;

        loop {
            while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
                chars.next();
            }
            match chars.next() {
                None => break,
                Some('(') => {}
                Some(c) => return Err(PermError::Malformed(format!("unexpected '{c}'"))),
            }
            any = true;
            let mut cyc: Vec<usize> = Vec::new();
            loop {
                while matches!(chars.peek(), Some(c) if c.is_whitespace() || *c == ',') {
                    chars.next();
                }
                match chars.peek() {
                    Some(')') => {
                        chars.next();
                        break;
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let mut val: usize = 0;
                        while matches!(chars.peek(), Some(c) if c.is_ascii_digit()) {
                            val = val * 10 + chars.next().unwrap().to_digit(10).unwrap() as usize;
                            if val > degree {
                                return Err(PermError::PointOutOfRange { point: val, degree });
                            }
                        }
                        if val == 0 {
                            return Err(PermError::PointOutOfRange { point: 0, degree });
                        }
                        if used[val - 1] {
                            return Err(PermError::RepeatedPoint(val));
                        }
                        used[val - 1] = true;
                        cyc.push(val - 1);
                    }
                    Some(c) => return Err(PermError::Malformed(format!("unexpected '{c}'"))),
                    None => return Err(PermError::Malformed("unclosed cycle".into())),
                }
            }
            for i in 0..cyc.len() {
                imgs[cyc[i]] = cyc[(i + 1) % cyc.len()] as u32;
            }
        }
        if !any && !text.trim().is_empty() {
            return Err(PermError::Malformed("garbage input".into()));
        }
        Ok(Perm { imgs })
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (i, p) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_three_cycle() {
        let p = Perm::parse("(1 2 3)", 3).unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.apply(2), 0);
    }

    #[test]
    fn parse_identity_forms() {
        assert!(Perm::parse("()", 5).unwrap().is_identity());
        assert!(Perm::parse("", 5).unwrap().is_identity());
        assert!(Perm::parse("   ", 5).unwrap().is_identity());
    }

    #[test]
    fn parse_disjoint_transpositions() {
        let p = Perm::parse("(1 2)(3 4)", 5).unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(3), 2);
        assert_eq!(p.apply(4), 4);
        assert_eq!(p.order(), 2);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Perm::parse("(1 9)", 3),
            Err(PermError::PointOutOfRange { .. })
        ));
        assert!(matches!(
            Perm::parse("(1 2)(2 3)", 3),
            Err(PermError::RepeatedPoint(2))
        ));
        assert!(matches!(
            Perm::parse("(1 2", 3),
            Err(PermError::Malformed(_))
        ));
        assert!(matches!(Perm::parse("1 2)", 3), Err(PermError::Malformed(_))));
        assert!(matches!(
            Perm::parse("(0 1)", 3),
            Err(PermError::PointOutOfRange { .. })
        ));
    }

    #[test]
    fn compose_is_left_to_right() {
        let a = Perm::parse("(1 2)", 3).unwrap();
        let b = Perm::parse("(2 3)", 3).unwrap();
        // 1 -> 2 under a, 2 -> 3 under b
        assert_eq!(a.compose(&b).apply(0), 2);
    }

    #[test]
    fn involution_squared_is_identity() {
        let a = Perm::parse("(1 2)", 2).unwrap();
        assert!(a.compose(&a).is_identity());
    }

    #[test]
    fn cycle_power() {
        let a = Perm::parse("(1 2 3)", 3).unwrap();
        let sq = a.compose(&a);
        assert_eq!(sq, Perm::parse("(1 3 2)", 3).unwrap());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = Perm::parse("(1 2 3)(4 5)", 6).unwrap();
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(
            Perm::parse("(1 2 3)", 3).unwrap().inverse(),
            Perm::parse("(1 3 2)", 3).unwrap()
        );
        let invol = Perm::parse("(1 2)(3 4)", 4).unwrap();
        assert_eq!(invol.inverse(), invol);
    }

    #[test]
    fn element_orders() {
        assert_eq!(Perm::parse("(1 2 3)(4 5)", 5).unwrap().order(), 6);
        assert_eq!(Perm::identity(4).order(), 1);
        assert_eq!(Perm::parse("(1 2 3 4 5 6 7)", 7).unwrap().order(), 7);
    }

    #[test]
    fn print_parse_roundtrip() {
        for text in ["(1 2 3)(4 5)", "()", "(2 4)(3 7 5)"] {
            let p = Perm::parse(text, 8).unwrap();
            let q = Perm::parse(&p.to_string(), 8).unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn conjugation() {
        let a = Perm::parse("(1 2 3)", 4).unwrap();
        let t = Perm::parse("(3 4)", 4).unwrap();
        assert_eq!(a.conjugate_by(&t), Perm::parse("(1 2 4)", 4).unwrap());
    }
}
