//! The truncated mapping cone `D: ⊕_s A⁺_{k_s} → ⊕_s B⁺` and its homology.
//!
//! Each `A⁺_k` is a tower (plus any reduced generators) and each `B⁺` is a
//! tower. Towers are cut at a common grading `top`; since `D` lowers grading
//! by one, everything at or below `top` is a subcomplex whose homology agrees
//! with the untruncated one in gradings `<= top - 1`.

use std::collections::{BTreeMap, HashMap};

use super::gf2::{image_and_kernel, BitVec, Echelon};
use super::layout::{check_homogeneous, Layout};
use super::GradedModule;
use crate::arith::{Rational, Slope};
use crate::error::{Error, Result};
use crate::knot::KnotData;
use crate::lens::{d_lens, LensSpace};

/// A knot, slope, Spin^c index and truncation parameters `(S, N)`.
#[derive(Clone, Debug)]
pub struct ConeSpec<'a> {
    pub knot: &'a KnotData,
    pub slope: Slope,
    pub i: i64,
    pub s_window: i64,
    pub u_cut: i64,
}

impl<'a> ConeSpec<'a> {
    /// Smallest window and cut satisfying the truncation invariants.
    pub fn new(knot: &'a KnotData, slope: Slope, i: i64) -> Result<Self> {
        let layout = Layout::minimal(slope, i, knot.genus())?;
        Ok(ConeSpec { knot, slope, i, s_window: layout.s, u_cut: Self::min_cut(knot) })
    }

    pub fn min_cut(knot: &KnotData) -> i64 {
        2 * (knot.vh.max_v() + knot.vh.max_h() + knot.genus() as i64) + 2
    }

    pub fn layout(&self) -> Result<Layout> {
        Layout::with_window(self.slope, self.i, self.s_window)
    }

    pub fn validate(&self) -> Result<Layout> {
        let layout = self.layout()?;
        if !layout.window_ok(self.knot.genus()) {
            return Err(Error::InvalidWindow(format!(
                "S = {} leaves slots with |k| < g = {} outside the window",
                self.s_window,
                self.knot.genus()
            )));
        }
        if self.u_cut < Self::min_cut(self.knot) {
            return Err(Error::InvalidWindow(format!(
                "N = {} is below the minimum {}",
                self.u_cut,
                Self::min_cut(self.knot)
            )));
        }
        Ok(layout)
    }

    /// `(S, N) → (S + 1, 2N)`.
    pub fn doubled(&self) -> Self {
        ConeSpec { s_window: self.s_window + 1, u_cut: 2 * self.u_cut, ..self.clone() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    Tower { height: i64 },
    Reduced { summand: usize, index: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub side: Side,
    pub slot: i64,
    pub kind: GenKind,
    /// Grading relative to the anchor.
    pub grading: i64,
}

/// An explicit truncated cone.
#[derive(Clone, Debug)]
pub struct Cone {
    layout: Layout,
    a: Vec<Generator>,
    b: Vec<Generator>,
    /// `D` on each `A` generator, as `B` indices.
    d: Vec<Vec<usize>>,
    top: i64,
    anchor: Rational,
    a_tower: HashMap<(i64, i64), usize>,
    b_tower: HashMap<(i64, i64), usize>,
}

pub fn build_cone(spec: &ConeSpec) -> Result<Cone> {
    let layout = spec.validate()?;
    let knot = spec.knot;
    let vh = &knot.vh;
    check_homogeneous(vh)?;
    if !layout.positive() && (vh.v(0) != 0 || vh.h(0) != 0) {
        return Err(Error::HypothesisFailed("the direct cone for negative slopes needs V_0 = H_0 = 0".into()));
    }
    let lens = LensSpace::new(layout.p, layout.q)?;
    let anchor = d_lens(&lens, layout.i)?;

    let mut bottoms: Vec<i64> = Vec::new();
    for s in layout.a_slots() {
        let alpha = layout.alpha(s, vh);
        bottoms.push(alpha);
        for r in knot.reduced_at(layout.k(s)) {
            bottoms.extend(r.local_gradings.iter().map(|l| alpha + l));
        }
    }
    bottoms.extend(layout.b_slots().map(|s| layout.beta(s)));
    let top = bottoms.iter().copied().max().unwrap_or(0) + 2 * spec.u_cut;

    let mut cone = Cone {
        layout,
        a: Vec::new(),
        b: Vec::new(),
        d: Vec::new(),
        top,
        anchor,
        a_tower: HashMap::new(),
        b_tower: HashMap::new(),
    };
    for s in layout.b_slots() {
        let beta = layout.beta(s);
        for h in 0..=(top - beta).div_euclid(2) {
            cone.b_tower.insert((s, h), cone.b.len());
            let kind = GenKind::Tower { height: h };
            cone.b.push(Generator { side: Side::B, slot: s, kind, grading: beta + 2 * h });
        }
    }
    for s in layout.a_slots() {
        let k = layout.k(s);
        let alpha = layout.alpha(s, vh);
        let (v, hh) = (vh.v(k), vh.h(k));
        for h in 0..=(top - alpha).div_euclid(2) {
            let mut targets = Vec::new();
            if layout.has_b(s) && h >= v {
                targets.push(cone.b_tower[&(s, h - v)]);
            }
            if layout.has_b(s + 1) && h >= hh {
                targets.push(cone.b_tower[&(s + 1, h - hh)]);
            }
            cone.a_tower.insert((s, h), cone.a.len());
            let kind = GenKind::Tower { height: h };
            cone.a.push(Generator { side: Side::A, slot: s, kind, grading: alpha + 2 * h });
            cone.d.push(targets);
        }
        for (summand, r) in knot.reduced.iter().enumerate().filter(|(_, r)| r.k == k) {
            for (index, l) in r.local_gradings.iter().enumerate() {
                let grading = alpha + l;
                let mut targets = Vec::new();
                for (on, t) in [(r.v_map(index), s), (r.h_map(index), s + 1)] {
                    if !on || !layout.has_b(t) {
                        continue;
                    }
                    if grading - 1 != layout.beta(t) {
                        return Err(Error::Validation {
                            knot: knot.name.clone(),
                            violation: format!(
                                "reduced generator at k={k} (local grading {l}) cannot map to the \
                                 bottom of B_{t}: degree mismatch"
                            ),
                        });
                    }
                    targets.push(cone.b_tower[&(t, 0)]);
                }
                let kind = GenKind::Reduced { summand, index };
                cone.a.push(Generator { side: Side::A, slot: s, kind, grading });
                cone.d.push(targets);
            }
        }
    }
    Ok(cone)
}

/// One homological degree: bases of `A_n` and `B_n`, `ker D_n` and
/// `im D_{n+1}`.
struct Degree {
    a: Vec<usize>,
    b: Vec<usize>,
    kernel: Vec<BitVec>,
    image: Echelon,
}

impl Cone {
    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn generators(&self) -> (&[Generator], &[Generator]) {
        (&self.a, &self.b)
    }

    /// `D` on `A` generator `j`, as indices into the `B` generators.
    pub fn differential(&self, j: usize) -> &[usize] {
        &self.d[j]
    }

    pub fn top(&self) -> i64 {
        self.top
    }

    /// `d(L(P, Q), i)`: relative grading `0` corresponds to this value.
    pub fn anchor(&self) -> &Rational {
        &self.anchor
    }

    fn by_grading(&self) -> BTreeMap<i64, (Vec<usize>, Vec<usize>)> {
        let mut m: BTreeMap<i64, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for (j, g) in self.a.iter().enumerate() {
            m.entry(g.grading).or_default().0.push(j);
        }
        for (j, g) in self.b.iter().enumerate() {
            m.entry(g.grading).or_default().1.push(j);
        }
        m
    }

    /// `D_n: A_n → B_{n-1}` as images of the `A_n` basis.
    fn d_images(&self, a_n: &[usize], b_prev: &[usize]) -> Vec<BitVec> {
        let pos: HashMap<usize, usize> = b_prev.iter().enumerate().map(|(i, &j)| (j, i)).collect();
        a_n.iter()
            .map(|&j| {
                let mut v = BitVec::zeros(b_prev.len());
                for t in &self.d[j] {
                    v.flip(pos[t]);
                }
                v
            })
            .collect()
    }

    fn degrees(&self) -> BTreeMap<i64, Degree> {
        let pieces = self.by_grading();
        let empty = (Vec::new(), Vec::new());
        let lo = pieces.keys().next().copied().unwrap_or(0);
        let mut out = BTreeMap::new();
        for n in lo..=self.top {
            let (a_n, b_n) = pieces.get(&n).unwrap_or(&empty);
            let b_prev = &pieces.get(&(n - 1)).unwrap_or(&empty).1;
            let a_next = &pieces.get(&(n + 1)).unwrap_or(&empty).0;
            let (_, kernel) = image_and_kernel(&self.d_images(a_n, b_prev), a_n.len());
            let (image, _) = image_and_kernel(&self.d_images(a_next, b_n), a_next.len());
            out.insert(n, Degree { a: a_n.clone(), b: b_n.clone(), kernel, image });
        }
        out
    }

    /// `D_{n+1}: A_{n+1} → B_n` is onto for every `n <= top - 1`.
    pub fn is_surjective(&self) -> bool {
        self.degrees().iter().all(|(&n, deg)| n > self.top - 1 || deg.image.rank() == deg.b.len())
    }

    /// `U` on a basis vector of one side in degree `n`, into degree `n - 2`.
    fn apply_u(&self, side: Side, v: &BitVec, from: &[usize], to: &[usize]) -> BitVec {
        let (gens, towers) = match side {
            Side::A => (&self.a, &self.a_tower),
            Side::B => (&self.b, &self.b_tower),
        };
        let pos: HashMap<usize, usize> = to.iter().enumerate().map(|(i, &j)| (j, i)).collect();
        let mut out = BitVec::zeros(to.len());
        for local in v.ones() {
            let g = &gens[from[local]];
            if let GenKind::Tower { height } = g.kind {
                if height > 0 {
                    out.flip(pos[&towers[&(g.slot, height - 1)]]);
                }
            }
        }
        out
    }

    /// Homology of the truncated cone, with the tower located by following
    /// a high-degree class down under `U`.
    pub fn homology(&self) -> Result<GradedModule> {
        let degrees = self.degrees();
        let rank =
            |n: i64| -> usize { degrees.get(&n).map(|d| d.kernel.len() + d.b.len() - d.image.rank()).unwrap_or(0) };
        let top = self.top - 1;
        if rank(top) + rank(top - 1) != 1 {
            return Err(Error::UnstableTruncation(format!(
                "ranks {} and {} near the cut; expected a single tower",
                rank(top),
                rank(top - 1)
            )));
        }
        let mut n = if rank(top) == 1 { top } else { top - 1 };
        let deg = &degrees[&n];
        let (mut a, mut b) = if let Some(k) = deg.kernel.first() {
            (k.clone(), BitVec::zeros(deg.b.len()))
        } else {
            let free = (0..deg.b.len())
                .map(|j| BitVec::unit(deg.b.len(), j))
                .find(|e| !deg.image.contains(e))
                .expect("cokernel has rank one");
            (BitVec::zeros(deg.a.len()), free)
        };
        while let (Some(cur), Some(next)) = (degrees.get(&n), degrees.get(&(n - 2))) {
            let a2 = self.apply_u(Side::A, &a, &cur.a, &next.a);
            let b2 = self.apply_u(Side::B, &b, &cur.b, &next.b);
            if a2.is_zero() && next.image.contains(&b2) {
                break;
            }
            a = a2;
            b = b2;
            n -= 2;
        }
        let bottom = n;
        let mut reduced = Vec::new();
        for (&m, _) in degrees.range(..=top) {
            let tower = usize::from(m >= bottom && (m - bottom) % 2 == 0);
            let r = rank(m);
            if r < tower {
                return Err(Error::UnstableTruncation(format!("tower missing in degree {m}")));
            }
            if r > tower {
                reduced.push((m, r - tower));
            }
        }
        if reduced.iter().any(|&(m, _)| m >= top - 1) {
            return Err(Error::UnstableTruncation("reduced homology reaches the cut".into()));
        }
        let shift = |g: i64| Rational::integer(g as i128) + &self.anchor;
        Ok(GradedModule {
            tower_bottom: Some(shift(bottom)),
            reduced: reduced.into_iter().map(|(m, r)| (shift(m), r)).collect(),
        })
    }
}

/// Homology at `(S, N)`, checked against `(S + 1, 2N)`.
pub fn cone_homology(spec: &ConeSpec) -> Result<GradedModule> {
    let first = build_cone(spec)?.homology()?;
    let second = build_cone(&spec.doubled())?.homology()?;
    if first != second {
        return Err(Error::UnstableTruncation(format!(
            "slope {} index {}: result changed when the window was doubled",
            spec.slope, spec.i
        )));
    }
    Ok(first)
}

/// Homology at the minimal window only.
pub fn cone_homology_unchecked(spec: &ConeSpec) -> Result<GradedModule> {
    build_cone(spec)?.homology()
}
