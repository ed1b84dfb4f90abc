use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Permutation of `{1, ..., k}` stored 0-based as the list of images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(k: usize) -> Self {
        Perm((0..k).collect())
    }

    /// `None` unless `images` is a permutation of `0..k`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let k = images.len();
        let mut seen = alloc::vec![false; k];
        for &i in &images {
            if i >= k || core::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Perm(images))
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sign(&self) -> i32 {
        let mut inv = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 { 1 } else { -1 }
    }

    /// All permutations of `{1..k}` in lexicographic order of their image lists.
    pub fn all(k: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Cycle notation such as `(12)` or `(123)(45)`, and `id` for the identity.
    pub fn label(&self) -> String {
        let mut s = String::new();
        let mut seen = alloc::vec![false; self.0.len()];
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            s.push('(');
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                push_index(&mut s, i + 1, self.0.len());
                i = self.0[i];
            }
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("id");
        }
        s
    }

    /// Inverse of [`Perm::label`] for permutations of `{1..k}`.
    pub fn parse(label: &str, k: usize) -> Option<Perm> {
        let mut images: Vec<usize> = (0..k).collect();
        if label == "id" {
            return Some(Perm(images));
        }
        let sep = k > 9;
        for cycle in label.split(')') {
            if cycle.is_empty() {
                continue;
            }
            let body = cycle.strip_prefix('(')?;
            let idx: Vec<usize> = if sep {
                body.split(',').map(|t| t.trim().parse::<usize>().ok()).collect::<Option<_>>()?
            } else {
                body.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>()?
            };
            for (a, b) in idx.iter().zip(idx.iter().cycle().skip(1)) {
                if *a == 0 || *a > k || *b == 0 || *b > k {
                    return None;
                }
                images[a - 1] = b - 1;
            }
        }
        Perm::from_images(images)
    }
}

fn push_index(s: &mut String, i: usize, k: usize) {
    use core::fmt::Write;
    if k > 9 && !s.ends_with('(') {
        s.push(',');
    }
    let _ = write!(s, "{i}");
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_and_labels() {
        let all = Perm::all(3);
        assert_eq!(all.len(), 6);
        let labels: Vec<String> = all.iter().map(Perm::label).collect();
        assert_eq!(labels, ["id", "(23)", "(12)", "(123)", "(132)", "(13)"]);
        for p in &all {
            assert_eq!(Perm::parse(&p.label(), 3).as_ref(), Some(p));
        }
        assert_eq!(Perm::all(0), [Perm::identity(0)]);
        assert_eq!(Perm::all(2)[1].sign(), -1);
    }
}
