use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Real quaternion `a + b i + c j + d k`, stored as a 4-vector.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Quaternion(pub [f64; 4]);

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion([0.0; 4]);
    pub const ONE: Quaternion = Quaternion([1.0, 0.0, 0.0, 0.0]);
    pub const I: Quaternion = Quaternion([0.0, 1.0, 0.0, 0.0]);
    pub const J: Quaternion = Quaternion([0.0, 0.0, 1.0, 0.0]);
    pub const K: Quaternion = Quaternion([0.0, 0.0, 0.0, 1.0]);

    /// The four quaternion units in coordinate order.
    pub const UNITS: [Quaternion; 4] = [Self::ONE, Self::I, Self::J, Self::K];

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Quaternion([a, b, c, d])
    }

    pub fn real(a: f64) -> Self {
        Quaternion([a, 0.0, 0.0, 0.0])
    }

    pub fn conj(self) -> Self {
        let [a, b, c, d] = self.0;
        Quaternion([a, -b, -c, -d])
    }

    pub fn re(self) -> f64 {
        self.0[0]
    }

    pub fn norm_sqr(self) -> f64 {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn scale(self, s: f64) -> Self {
        let [a, b, c, d] = self.0;
        Quaternion([a * s, b * s, c * s, d * s])
    }

    /// The 2x2 complex block `[[z, w], [-conj(w), conj(z)]]` with
    /// `q = z + w j`.
    pub fn to_complex_block(self) -> [[Complex64; 2]; 2] {
        let [a, b, c, d] = self.0;
        let z = Complex64::new(a, b);
        let w = Complex64::new(c, d);
        [[z, w], [-w.conj(), z.conj()]]
    }

    /// Inverse of [`to_complex_block`](Self::to_complex_block), averaging the
    /// redundant entries.
    pub fn from_complex_block(block: [[Complex64; 2]; 2]) -> Self {
        let z = (block[0][0] + block[1][1].conj()) * 0.5;
        let w = (block[0][1] - block[1][0].conj()) * 0.5;
        Quaternion([z.re, z.im, w.re, w.im])
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        let (a, b) = (self.0, o.0);
        Quaternion([a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]])
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        self + (-o)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        self.scale(-1.0)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        let [a1, b1, c1, d1] = self.0;
        let [a2, b2, c2, d2] = o.0;
        Quaternion([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ])
    }
}
