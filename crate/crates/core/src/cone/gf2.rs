//! Dense linear algebra over F₂ on packed `u64` words.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.flip(i);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn set(&mut self, i: usize, on: bool) {
        if self.get(i) != on {
            self.flip(i);
        }
    }

    pub fn xor_assign(&mut self, o: &BitVec) {
        debug_assert_eq!(self.len, o.len);
        for (a, b) in self.words.iter_mut().zip(&o.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Lowest set index.
    pub fn lowest(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }
}

/// Row-echelon basis of a subspace, keyed by each row's lowest bit.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, BitVec)>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the span.
    pub fn reduce(&self, v: &mut BitVec) {
        for (pivot, row) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
            }
        }
    }

    /// Adds `v` to the span; returns false if it was already there.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        self.reduce(&mut v);
        match v.lowest() {
            None => false,
            Some(p) => {
                // keep earlier rows reduced at the new pivot
                for (_, row) in &mut self.rows {
                    if row.get(p) {
                        row.xor_assign(&v);
                    }
                }
                self.rows.push((p, v));
                true
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }
}

/// Image echelon basis and kernel basis of the map sending domain basis
/// vector `j` to `images[j]`.
pub fn image_and_kernel(images: &[BitVec], domain_len: usize) -> (Echelon, Vec<BitVec>) {
    // rows track (image, combination of domain vectors producing it)
    let mut pivots: Vec<(usize, BitVec, BitVec)> = Vec::new();
    let mut image = Echelon::new();
    let mut kernel = Vec::new();
    for (j, img) in images.iter().enumerate() {
        let mut v = img.clone();
        let mut combo = BitVec::unit(domain_len, j);
        for (p, row, c) in &pivots {
            if v.get(*p) {
                v.xor_assign(row);
                combo.xor_assign(c);
            }
        }
        match v.lowest() {
            None => kernel.push(combo),
            Some(p) => {
                for (_, row, c) in &mut pivots {
                    if row.get(p) {
                        row.xor_assign(&v);
                        c.xor_assign(&combo);
                    }
                }
                image.insert(v.clone());
                pivots.push((p, v, combo));
            }
        }
    }
    (image, kernel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(bits: &[u8]) -> BitVec {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b == 1);
        }
        v
    }

    #[test]
    fn echelon_span() {
        let mut e = Echelon::new();
        assert!(e.insert(bv(&[1, 1, 0])));
        assert!(e.insert(bv(&[0, 1, 1])));
        assert!(!e.insert(bv(&[1, 0, 1])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&bv(&[1, 0, 1])));
        assert!(!e.contains(&bv(&[1, 0, 0])));
    }

    #[test]
    fn kernel_of_sum_map() {
        // three vectors with a + b = c
        let imgs = vec![bv(&[1, 1, 0]), bv(&[0, 1, 1]), bv(&[1, 0, 1])];
        let (im, ker) = image_and_kernel(&imgs, 3);
        assert_eq!(im.rank(), 2);
        assert_eq!(ker, vec![bv(&[1, 1, 1])]);
    }

    #[test]
    fn wide_vectors() {
        let mut v = BitVec::zeros(130);
        v.flip(129);
        assert_eq!(v.lowest(), Some(129));
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![129]);
        v.flip(129);
        assert!(v.is_zero());
    }
}
