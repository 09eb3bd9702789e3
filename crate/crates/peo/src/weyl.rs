//! Symmetric-group elements: reduced words, length, Bruhat order and the
//! longest element. Simple reflections are indexed 1..n-1 matching the
//! simple roots e_i - e_{i+1}.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::Rat;

/// A permutation of {1..n} stored as its image list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WeylElem {
    images: Vec<usize>,
}

impl WeylElem {
    pub fn identity(n: usize) -> Self {
        WeylElem {
            images: (1..=n).collect(),
        }
    }

    /// Builds from an image list; must be a bijection on {1..n}.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Parse(format!("not a permutation: {images:?}")));
            }
            seen[x - 1] = true;
        }
        Ok(WeylElem { images })
    }

    /// The adjacent transposition s_i = (i, i+1), 1 <= i <= n-1.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Ok(WeylElem { images })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Coxeter length = inversion count.
    pub fn length(&self) -> usize {
        let n = self.rank();
        let mut count = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Function composition: (self . other)(i) = self(other(i)).
    pub fn compose(&self, other: &WeylElem) -> Result<WeylElem> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        Ok(WeylElem {
            images: other.images.iter().map(|&x| self.images[x - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> WeylElem {
        let mut images = vec![0usize; self.rank()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        WeylElem { images }
    }

    /// Right multiplication by s_i: swaps positions i and i+1 of the images.
    pub fn mul_simple_right(&self, i: usize) -> WeylElem {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        WeylElem { images }
    }

    /// w s_i < w, i.e. w(i) > w(i+1).
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// One reduced word, produced by repeatedly clearing right descents.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while !w.is_identity() {
            let i = (1..w.rank())
                .find(|&i| w.has_right_descent(i))
                .expect("non-identity permutation has a descent");
            word.push(i);
            w = w.mul_simple_right(i);
        }
        word.reverse();
        word
    }

    /// Moves the value at source coordinate i to coordinate w(i).
    pub fn permute(&self, coords: &[Rat]) -> Vec<Rat> {
        assert_eq!(coords.len(), self.rank());
        let mut out = coords.to_vec();
        for (i, &wi) in self.images.iter().enumerate() {
            out[wi - 1] = coords[i];
        }
        out
    }
}

/// Product of adjacent transpositions applied left to right.
pub fn from_reduced_word(n: usize, word: &[usize]) -> Result<WeylElem> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let mut w = WeylElem::identity(n);
    for &i in word {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        w = w.mul_simple_right(i);
    }
    Ok(w)
}

/// The order-reversing permutation, of length n(n-1)/2.
pub fn longest_element(n: usize) -> WeylElem {
    WeylElem {
        images: (1..=n).rev().collect(),
    }
}

/// Bruhat order via the lifting property against right descents of y.
pub fn bruhat_leq(x: &WeylElem, y: &WeylElem) -> Result<bool> {
    if x.rank() != y.rank() {
        return Err(Error::RankMismatch(x.rank(), y.rank()));
    }
    let mut x = x.clone();
    let mut y = y.clone();
    loop {
        if x.length() > y.length() {
            return Ok(false);
        }
        if y.is_identity() {
            return Ok(x.is_identity());
        }
        let i = (1..y.rank())
            .find(|&i| y.has_right_descent(i))
            .expect("non-identity permutation has a descent");
        if x.has_right_descent(i) {
            x = x.mul_simple_right(i);
        }
        y = y.mul_simple_right(i);
    }
}

/// All n! elements, in lexicographic image order.
pub fn all_elements(n: usize) -> Vec<WeylElem> {
    (1..=n)
        .permutations(n)
        .map(|images| WeylElem { images })
        .collect()
}
