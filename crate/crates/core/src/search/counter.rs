//! Face counting specialised to `K_{n,n}` on `ℤ_{2n}`.
//!
//! The arc `(a, b)` is stored at `a·n + b/2`; `phi` holds the face
//! successor `(a, b) ↦ (b, succ_b(a))` directly, so changing the rotation
//! at one vertex only rewrites the `n` arcs entering it.

pub(super) struct FaceCounter {
    n: usize,
    phi: Vec<u32>,
    stamp: Vec<u32>,
    generation: u32,
}

impl FaceCounter {
    pub(super) fn new(n: usize) -> Self {
        let darts = 2 * n * n;
        Self { n, phi: vec![0; darts], stamp: vec![0; darts], generation: 0 }
    }

    #[inline]
    fn arc(&self, a: usize, b: usize) -> usize {
        a * self.n + b / 2
    }

    /// Installs the cyclic order `rotation` at `v`.
    #[cfg(test)]
    pub(super) fn set_rotation(&mut self, v: usize, rotation: &[usize]) {
        let len = rotation.len();
        for j in 0..len {
            let a = rotation[j];
            let s = rotation[(j + 1) % len];
            let into = self.arc(a, v);
            self.phi[into] = self.arc(v, s) as u32;
        }
    }

    /// Installs `(v−1, v+1, free…)` at `v`.
    #[inline]
    pub(super) fn set_free(&mut self, v: usize, free: &[usize]) {
        let big = 2 * self.n;
        let (p, q) = ((v + big - 1) % big, (v + 1) % big);
        let (pa, qv) = (self.arc(p, v), self.arc(v, q));
        self.phi[pa] = qv as u32;
        let mut last = q;
        for &w in free {
            let into = self.arc(last, v);
            self.phi[into] = self.arc(v, w) as u32;
            last = w;
        }
        let into = self.arc(last, v);
        self.phi[into] = self.arc(v, p) as u32;
    }

    pub(super) fn face_count(&mut self) -> usize {
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.fill(0);
            self.generation = 1;
        }
        let g = self.generation;
        let mut faces = 0;
        for start in 0..self.phi.len() {
            if self.stamp[start] == g {
                continue;
            }
            faces += 1;
            let mut d = start;
            while self.stamp[d] != g {
                self.stamp[d] = g;
                d = self.phi[d] as usize;
            }
        }
        faces
    }
}
