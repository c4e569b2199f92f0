//! Kostant cascade and the layer decomposition of a nilradical.
//!
//! The cascade picks mutually strongly orthogonal roots by repeated
//! maximality; each cascade root carries a layer of positive roots, the
//! corresponding graded subalgebras filter the nilradical, and the
//! stepwise decomposition conditions are verified exactly on the bracket
//! tensor.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::NilpotentAlgebra;
use crate::linalg::Subspace;
use crate::rat::{rat, Rat};
use crate::roots::{RestrictedRootDatum, Root};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CascadeError {
    Reducible,
    /// A cascade root failed the nonmultipliable assertion.
    Multipliable(Root),
    /// Two cascade roots are not strongly orthogonal.
    NotStronglyOrthogonal(Root, Root),
    /// A positive root of the datum escaped the layer partition.
    PartitionFailure(Root),
    /// sigma_r failed to stabilize a layer or pair onto beta_r.
    SigmaFailure { layer: usize, root: Root },
    /// dim(l_r / z_r) came out odd: inconsistent with square integrability.
    OddLayer { layer: usize, dim_l: usize, dim_z: usize },
    /// z_r + v_r failed to fill out l_r.
    UngradedSplit { layer: usize },
}

impl core::fmt::Display for CascadeError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CascadeError::Reducible => write!(f, "cascade requires an irreducible root system"),
            CascadeError::Multipliable(r) => {
                write!(f, "cascade root {} is multipliable", r.display())
            }
            CascadeError::NotStronglyOrthogonal(a, b) => write!(
                f,
                "cascade roots {} and {} are not strongly orthogonal",
                a.display(),
                b.display()
            ),
            CascadeError::PartitionFailure(r) => {
                write!(f, "root {} lies in no layer and is no cascade root", r.display())
            }
            CascadeError::SigmaFailure { layer, root } => {
                write!(f, "sigma_{} fails on root {}", layer + 1, root.display())
            }
            CascadeError::OddLayer { layer, dim_l, dim_z } => write!(
                f,
                "layer {} has odd dim(l/z) = {} - {}",
                layer + 1,
                dim_l,
                dim_z
            ),
            CascadeError::UngradedSplit { layer } => {
                write!(f, "layer {} does not split as z + v gradedly", layer + 1)
            }
        }
    }
}

/// Cascade roots plus, per step, every maximal candidate that was available
/// (ties are broken lexicographically, but reducible intermediate systems
/// make the choice visible here).
#[derive(Clone, Debug)]
pub struct CascadeRoots {
    pub betas: Vec<Root>,
    pub candidates: Vec<Vec<Root>>,
}

/// The Kostant cascade: beta_1 the highest root, beta_{r+1} maximal among
/// positive roots orthogonal to all earlier betas, until none remain.
pub fn kostant_cascade(datum: &RestrictedRootDatum) -> Result<CascadeRoots, CascadeError> {
    if !datum.is_irreducible() {
        return Err(CascadeError::Reducible);
    }
    let coeffs: Vec<Vec<Rat>> = datum
        .positive_roots
        .iter()
        .map(|r| datum.coeffs_wrt_simple(r).expect("positive root in simple span"))
        .collect();
    let dominates = |i: usize, j: usize| -> bool {
        coeffs[i]
            .iter()
            .zip(coeffs[j].iter())
            .all(|(a, b)| !(a - b).is_negative())
    };
    let mut betas: Vec<Root> = Vec::new();
    let mut candidates: Vec<Vec<Root>> = Vec::new();
    loop {
        let orthogonal: Vec<usize> = (0..datum.positive_roots.len())
            .filter(|&i| {
                betas
                    .iter()
                    .all(|b| datum.positive_roots[i].dot(b).is_zero())
            })
            .collect();
        if orthogonal.is_empty() {
            break;
        }
        let maximal: Vec<usize> = orthogonal
            .iter()
            .copied()
            .filter(|&i| !orthogonal.iter().any(|&j| j != i && dominates(j, i)))
            .collect();
        // positive roots are lex sorted, so the first maximal index is lex-least
        let chosen = maximal[0];
        candidates.push(maximal.iter().map(|&i| datum.positive_roots[i].clone()).collect());
        betas.push(datum.positive_roots[chosen].clone());
    }
    for b in &betas {
        if datum.is_root(&b.double()) {
            return Err(CascadeError::Multipliable(b.clone()));
        }
    }
    for (i, a) in betas.iter().enumerate() {
        for b in betas.iter().skip(i + 1) {
            if datum.is_root(&a.add(b)) || datum.is_root(&a.sub(b)) {
                return Err(CascadeError::NotStronglyOrthogonal(a.clone(), b.clone()));
            }
        }
    }
    Ok(CascadeRoots { betas, candidates })
}

/// Layer sets: Delta^+_1 = {a : beta_1 - a positive}, and inductively
/// Delta^+_{r+1} among the leftovers. Checks the partition property.
pub fn layer_sets(datum: &RestrictedRootDatum, betas: &[Root]) -> Result<Vec<Vec<Root>>, CascadeError> {
    let mut taken: Vec<bool> = vec![false; datum.positive_roots.len()];
    let mut layers: Vec<Vec<Root>> = Vec::new();
    for beta in betas {
        let mut layer = Vec::new();
        for (i, alpha) in datum.positive_roots.iter().enumerate() {
            if taken[i] {
                continue;
            }
            let diff = beta.sub(alpha);
            if datum.is_positive_root(&diff) {
                taken[i] = true;
                layer.push(alpha.clone());
            }
        }
        layers.push(layer);
    }
    // partition: every positive root is a cascade root or in exactly one layer
    for (i, alpha) in datum.positive_roots.iter().enumerate() {
        let is_beta = betas.contains(alpha);
        if is_beta && taken[i] {
            return Err(CascadeError::PartitionFailure(alpha.clone()));
        }
        if !is_beta && !taken[i] {
            return Err(CascadeError::PartitionFailure(alpha.clone()));
        }
    }
    Ok(layers)
}

/// sigma_r on layer r: alpha -> beta_r - alpha (equal to minus the
/// reflection in beta_r on the layer). Verified to be an involution of the
/// layer with alpha + sigma(alpha) = beta_r.
pub fn sigma_involution(
    datum: &RestrictedRootDatum,
    betas: &[Root],
    layers: &[Vec<Root>],
    r: usize,
) -> Result<Vec<(Root, Root)>, CascadeError> {
    let beta = &betas[r];
    let bb = beta.dot(beta);
    let mut pairs = Vec::new();
    for alpha in &layers[r] {
        // -s_beta(alpha) = (2(alpha,beta)/(beta,beta)) beta - alpha
        let f = rat(2) * alpha.dot(beta) / bb.clone();
        let sigma = beta.scale(&f).sub(alpha);
        let ok = layers[r].contains(&sigma) && alpha.add(&sigma) == *beta;
        if !ok {
            return Err(CascadeError::SigmaFailure {
                layer: r,
                root: alpha.clone(),
            });
        }
        pairs.push((alpha.clone(), sigma));
    }
    Ok(pairs)
}

/// The full layer decomposition of a graded nilradical.
#[derive(Clone, Debug)]
pub struct CascadeDecomposition {
    pub datum: RestrictedRootDatum,
    pub algebra: NilpotentAlgebra,
    pub betas: Vec<Root>,
    pub beta_candidates: Vec<Vec<Root>>,
    pub layers: Vec<Vec<Root>>,
    /// l_r spans
    pub layer_span: Vec<Subspace>,
    /// z_r = center(l_r)
    pub layer_center: Vec<Subspace>,
    /// v_r, the graded complement of z_r in l_r
    pub layer_complement: Vec<Subspace>,
    /// n_r = l_1 + ... + l_r
    pub filtration: Vec<Subspace>,
    /// s = sum of the z_r
    pub quasi_center: Subspace,
    /// v = sum of the v_r
    pub complement: Subspace,
    pub d: Vec<usize>,
}

impl CascadeDecomposition {
    pub fn m(&self) -> usize {
        self.betas.len()
    }

    pub fn dim_n(&self) -> usize {
        self.algebra.dim()
    }

    pub fn dim_s(&self) -> usize {
        self.quasi_center.dim()
    }

    pub fn d_total(&self) -> usize {
        self.d.iter().sum()
    }

    /// c = 2^{d_1 + ... + d_m} d_1! ... d_m!
    pub fn c_constant(&self) -> BigInt {
        let mut c = BigInt::from(1) << self.d_total();
        for &dr in &self.d {
            for k in 2..=dr {
                c *= BigInt::from(k);
            }
        }
        c
    }

    /// Basis rows of s in layer order, tagged with their layer index.
    pub fn s_basis(&self) -> Vec<(usize, Vec<Rat>)> {
        let mut rows = Vec::new();
        for (r, z) in self.layer_center.iter().enumerate() {
            for b in z.basis() {
                rows.push((r, b.clone()));
            }
        }
        rows
    }

    /// The root carried by an s-basis row (centers are graded, so each row
    /// is supported in a single root space).
    pub fn s_var_root(&self, row: &[Rat]) -> Option<Root> {
        let mut found: Option<Root> = None;
        for (i, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let root = &self.algebra.basis[i].root;
            match &found {
                None => found = Some(root.clone()),
                Some(r) if r == root => {}
                _ => return None,
            }
        }
        found
    }
}

/// Deterministic graded complement of `center` inside the listed root
/// spaces: unit vectors are added in basis order whenever independent.
fn graded_complement(
    algebra: &NilpotentAlgebra,
    center: &Subspace,
    roots: &[Root],
) -> Result<Subspace, ()> {
    let mut picked: Vec<Vec<Rat>> = Vec::new();
    let mut covered = center.clone();
    for root in roots {
        for i in algebra.root_space(root) {
            let e = algebra.coordinate_vector(i);
            if !covered.contains(&e) {
                covered = covered.sum(&Subspace::from_spanning(algebra.dim(), &[e.clone()]));
                picked.push(e);
            }
        }
    }
    Ok(Subspace::from_spanning(algebra.dim(), &picked))
}

/// Builds the layer decomposition: spans, centers, graded complements,
/// filtration, quasi-center and the degrees d_r.
pub fn layer_decomposition(
    algebra: &NilpotentAlgebra,
    datum: &RestrictedRootDatum,
) -> Result<CascadeDecomposition, CascadeError> {
    let cascade = kostant_cascade(datum)?;
    let layers = layer_sets(datum, &cascade.betas)?;
    for r in 0..cascade.betas.len() {
        sigma_involution(datum, &cascade.betas, &layers, r)?;
    }
    let m = cascade.betas.len();
    let mut layer_span = Vec::with_capacity(m);
    let mut layer_center = Vec::with_capacity(m);
    let mut layer_complement = Vec::with_capacity(m);
    let mut d = Vec::with_capacity(m);
    for r in 0..m {
        let mut indices = algebra.root_space(&cascade.betas[r]);
        for alpha in &layers[r] {
            indices.extend(algebra.root_space(alpha));
        }
        let l = algebra.span_of_indices(&indices);
        let z = algebra.center_of(&l);
        let v = graded_complement(algebra, &z, &layers[r]).map_err(|_| CascadeError::UngradedSplit { layer: r })?;
        if z.dim() + v.dim() != l.dim() || !l.contains_subspace(&z.sum(&v)) {
            return Err(CascadeError::UngradedSplit { layer: r });
        }
        let fiber = l.dim() - z.dim();
        if fiber % 2 != 0 {
            return Err(CascadeError::OddLayer {
                layer: r,
                dim_l: l.dim(),
                dim_z: z.dim(),
            });
        }
        d.push(fiber / 2);
        layer_span.push(l);
        layer_center.push(z);
        layer_complement.push(v);
    }
    let mut filtration: Vec<Subspace> = Vec::with_capacity(m);
    let mut acc = Subspace::zero(algebra.dim());
    for l in &layer_span {
        acc = acc.sum(l);
        filtration.push(acc.clone());
    }
    let quasi_center = layer_center
        .iter()
        .fold(Subspace::zero(algebra.dim()), |a, z| a.sum(z));
    let complement = layer_complement
        .iter()
        .fold(Subspace::zero(algebra.dim()), |a, v| a.sum(v));
    Ok(CascadeDecomposition {
        datum: datum.clone(),
        algebra: algebra.clone(),
        betas: cascade.betas,
        beta_candidates: cascade.candidates,
        layers,
        layer_span,
        layer_center,
        layer_complement,
        filtration,
        quasi_center,
        complement,
        d,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetupMode {
    Strong,
    Weak,
}

/// Verification report for the decomposition conditions. A false verdict
/// always carries at least one witness string naming the failure.
#[derive(Clone, Debug)]
pub struct SetupReport {
    pub mode: SetupMode,
    pub cond_a: bool,
    pub cond_b: bool,
    pub cond_c: bool,
    pub witnesses: Vec<String>,
}

impl SetupReport {
    pub fn all_pass(&self) -> bool {
        self.cond_a && self.cond_b && self.cond_c
    }
}

/// Checks the decomposition conditions on the bracket tensor:
/// (a) each layer's generic Pfaffian is a nonzero polynomial,
/// (b) the filtration is by ideals with semidirect steps,
/// (c) strong: [l_r, z_s] = 0 and [l_r, l_s] in v for r > s;
///     weak: [l_r, z_s] = 0 for r >= s plus the split containments
///     [l_r, l_s] in l''_s + v_s for r > s.
pub fn check_setup(dec: &CascadeDecomposition, mode: SetupMode) -> SetupReport {
    let mut witnesses = Vec::new();
    let m = dec.m();
    let alg = &dec.algebra;

    let mut cond_a = true;
    for r in 0..m {
        let pf = crate::density::layer_pfaffian(dec, r);
        if pf.is_zero() {
            cond_a = false;
            witnesses.push(format!(
                "cond_a: layer {} has identically zero Pfaffian",
                r + 1
            ));
        }
    }

    let mut cond_b = true;
    let full = alg.full_space();
    for r in 0..m {
        if !alg.is_ideal_in(&dec.filtration[r], &full) {
            cond_b = false;
            witnesses.push(format!("cond_b: n_{} is not an ideal of n", r + 1));
        }
        if r > 0 {
            let prev = &dec.filtration[r - 1];
            let meet = prev.intersect(&dec.layer_span[r]);
            if !meet.is_zero() {
                cond_b = false;
                witnesses.push(format!(
                    "cond_b: n_{} and l_{} overlap in dimension {}",
                    r,
                    r + 1,
                    meet.dim()
                ));
            }
            if prev.sum(&dec.layer_span[r]) != dec.filtration[r] {
                cond_b = false;
                witnesses.push(format!("cond_b: n_{} != n_{} + l_{}", r + 1, r, r + 1));
            }
        }
    }

    let mut cond_c = true;
    let mut record_bracket_witness = |kind: &str, r: usize, s: usize, a: &Subspace, b: &Subspace, target: Option<&Subspace>| {
        // find a concrete offending pair of basis vectors
        for (ia, u) in a.basis().iter().enumerate() {
            for (ib, w) in b.basis().iter().enumerate() {
                let br = alg.bracket_vectors(u, w);
                let bad = match target {
                    None => !crate::rat::is_zero_vec(&br),
                    Some(t) => !crate::rat::is_zero_vec(&br) && !t.contains(&br),
                };
                if bad {
                    witnesses.push(format!(
                        "cond_c ({}): witness bracket [l_{}[{}], .[{}]] escapes (r={}, s={})",
                        kind,
                        r + 1,
                        ia,
                        ib,
                        r + 1,
                        s + 1
                    ));
                    return;
                }
            }
        }
        witnesses.push(format!("cond_c ({}): containment fails for r={}, s={}", kind, r + 1, s + 1));
    };
    match mode {
        SetupMode::Strong => {
            for r in 0..m {
                for s in 0..r {
                    let lz = alg.bracket_span(&dec.layer_span[r], &dec.layer_center[s]);
                    if !lz.is_zero() {
                        cond_c = false;
                        record_bracket_witness("[l_r,z_s]=0", r, s, &dec.layer_span[r], &dec.layer_center[s], None);
                    }
                    let ll = alg.bracket_span(&dec.layer_span[r], &dec.layer_span[s]);
                    if !dec.complement.contains_subspace(&ll) {
                        cond_c = false;
                        record_bracket_witness("[l_r,l_s] in v", r, s, &dec.layer_span[r], &dec.layer_span[s], Some(&dec.complement));
                    }
                }
            }
        }
        SetupMode::Weak => {
            for r in 0..m {
                for s in 0..=r {
                    let lz = alg.bracket_span(&dec.layer_span[r], &dec.layer_center[s]);
                    if !lz.is_zero() {
                        cond_c = false;
                        record_bracket_witness("[l_r,z_s]=0 (r>=s)", r, s, &dec.layer_span[r], &dec.layer_center[s], None);
                    }
                }
                for s in 0..r {
                    // l''_s: central directions of l_s away from the g_{beta_s} line(s)
                    let beta_space = alg.span_of_indices(&alg.root_space(&dec.betas[s]));
                    let l_dprime = dec.layer_center[s].intersect(&beta_space.complement_within(alg, &dec.layer_span[s]));
                    let target = l_dprime.sum(&dec.layer_complement[s]);
                    let ll = alg.bracket_span(&dec.layer_span[r], &dec.layer_span[s]);
                    if !target.contains_subspace(&ll) {
                        cond_c = false;
                        record_bracket_witness("[l_r,l_s] in l''_s+v_s", r, s, &dec.layer_span[r], &dec.layer_span[s], Some(&target));
                    }
                }
            }
        }
    }

    SetupReport {
        mode,
        cond_a,
        cond_b,
        cond_c,
        witnesses,
    }
}

/// Outcome of the Heisenberg pairing analysis.
#[derive(Clone, Debug)]
pub enum PairingOutcome {
    Decomposition {
        /// (center line generator, dim u, dim u'), one per Heisenberg block
        heisenberg: Vec<(Vec<Rat>, usize, usize)>,
        /// dimension of the leftover commutative summand of the center
        abelian_dim: usize,
    },
    Refusal {
        hypothesis: &'static str,
        detail: String,
    },
}

impl PairingOutcome {
    pub fn is_decomposition(&self) -> bool {
        matches!(self, PairingOutcome::Decomposition { .. })
    }
}

/// Attempts the direct-sum-of-Heisenberg-algebras split of a graded
/// nilpotent algebra: center lines z_b, paired spaces u_a, u'_a with
/// nondegenerate pairing into a single line per block. Refusals name the
/// failed hypothesis: (i) isotropy of each side, (ii) cross-block
/// brackets, (iii) nondegenerate pairing into a line.
pub fn heisenberg_pairing_check(alg: &NilpotentAlgebra) -> PairingOutcome {
    let n = alg.dim();
    let center = alg.center();

    // non-central parts of the root spaces, in lex root order
    let mut roots: Vec<Root> = Vec::new();
    for b in &alg.basis {
        if !roots.contains(&b.root) {
            roots.push(b.root.clone());
        }
    }
    roots.sort_by(|a, b| crate::rat::lex_cmp(&a.0, &b.0));
    let mut v_parts: Vec<(Root, Vec<Vec<Rat>>)> = Vec::new();
    for root in &roots {
        let mut covered = center.clone();
        let mut part = Vec::new();
        for i in alg.root_space(root) {
            let e = alg.coordinate_vector(i);
            if !covered.contains(&e) {
                covered = covered.sum(&Subspace::from_spanning(n, &[e.clone()]));
                part.push(e);
            }
        }
        if !part.is_empty() {
            v_parts.push((root.clone(), part));
        }
    }

    // pair graph on the non-central parts
    let k = v_parts.len();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut self_loops: Vec<usize> = Vec::new();
    let line_of = |w: &Vec<Rat>| -> Vec<Rat> {
        // normalize so the first nonzero coordinate is 1
        let lead = w.iter().find(|c| !c.is_zero()).expect("nonzero");
        w.iter().map(|c| c / lead).collect()
    };
    let mut edge_lines: BTreeMap<(usize, usize), Vec<Rat>> = BTreeMap::new();
    for a in 0..k {
        for b in a..k {
            let mut image: Vec<Vec<Rat>> = Vec::new();
            for u in &v_parts[a].1 {
                for w in &v_parts[b].1 {
                    if a == b && u == w {
                        continue;
                    }
                    let br = alg.bracket_vectors(u, w);
                    if !crate::rat::is_zero_vec(&br) {
                        image.push(br);
                    }
                }
            }
            if image.is_empty() {
                continue;
            }
            let span = Subspace::from_spanning(n, &image);
            if !center.contains_subspace(&span) {
                return PairingOutcome::Refusal {
                    hypothesis: "(iii)",
                    detail: format!(
                        "bracket of {} and {} leaves the center",
                        v_parts[a].0.display(),
                        v_parts[b].0.display()
                    ),
                };
            }
            if span.dim() > 1 {
                return PairingOutcome::Refusal {
                    hypothesis: "(iii)",
                    detail: format!(
                        "pairing of {} and {} is not into a single line",
                        v_parts[a].0.display(),
                        v_parts[b].0.display()
                    ),
                };
            }
            let line = line_of(&span.basis()[0].clone());
            if a == b {
                self_loops.push(a);
                edge_lines.insert((a, a), line);
            } else {
                edges.push((a, b));
                edge_lines.insert((a, b), line);
            }
        }
    }

    // connected components of the pair graph
    let mut comp = vec![usize::MAX; k];
    let mut ncomp = 0usize;
    for start in 0..k {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = ncomp;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &(a, b) in &edges {
                let other = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if comp[other] == usize::MAX {
                    comp[other] = ncomp;
                    stack.push(other);
                }
            }
        }
        ncomp += 1;
    }

    // classify components: self-loop symplectic blocks or bipartite pairs
    let mut blocks: BTreeMap<Vec<Rat>, (Vec<Vec<Rat>>, Vec<Vec<Rat>>)> = BTreeMap::new();
    for c in 0..ncomp {
        let members: Vec<usize> = (0..k).filter(|&i| comp[i] == c).collect();
        let has_self = members.iter().any(|i| self_loops.contains(i));
        if has_self {
            if members.len() > 1 {
                return PairingOutcome::Refusal {
                    hypothesis: "(ii)",
                    detail: format!(
                        "root {} pairs both with itself and with other spaces",
                        v_parts[members[0]].0.display()
                    ),
                };
            }
            let i = members[0];
            let line = edge_lines[&(i, i)].clone();
            let gen = line.clone();
            // symplectic reduction of the bracket form on the part
            let mut vs: Vec<Vec<Rat>> = v_parts[i].1.clone();
            let bform = |x: &Vec<Rat>, y: &Vec<Rat>| -> Rat {
                let br = alg.bracket_vectors(x, y);
                // coefficient along the line generator
                let lead = gen.iter().position(|g| !g.is_zero()).unwrap();
                br[lead].clone() / gen[lead].clone()
            };
            let mut u_side: Vec<Vec<Rat>> = Vec::new();
            let mut up_side: Vec<Vec<Rat>> = Vec::new();
            while !vs.is_empty() {
                let x = vs.remove(0);
                let pos = vs.iter().position(|y| !bform(&x, y).is_zero());
                let Some(p) = pos else {
                    return PairingOutcome::Refusal {
                        hypothesis: "(iii)",
                        detail: format!(
                            "degenerate self-pairing on {}",
                            v_parts[i].0.display()
                        ),
                    };
                };
                let mut y = vs.remove(p);
                let scale = bform(&x, &y);
                for c in y.iter_mut() {
                    *c = c.clone() / scale.clone();
                }
                for w in vs.iter_mut() {
                    let cy = bform(w, &y);
                    let cx = bform(w, &x);
                    // w -> w - cy * x + cx * y
                    for t in 0..n {
                        let adj = &cy * &x[t] - &cx * &y[t];
                        w[t] -= adj;
                    }
                }
                u_side.push(x);
                up_side.push(y);
            }
            let entry = blocks.entry(line).or_insert_with(|| (Vec::new(), Vec::new()));
            entry.0.extend(u_side);
            entry.1.extend(up_side);
            continue;
        }
        if members.len() == 1 {
            // isolated non-central space with no pairing at all: its vectors
            // would have to be central, which they are not
            return PairingOutcome::Refusal {
                hypothesis: "(iii)",
                detail: format!(
                    "non-central space {} pairs with nothing",
                    v_parts[members[0]].0.display()
                ),
            };
        }
        // bipartite 2-coloring from the lex-least member
        let mut color: BTreeMap<usize, bool> = BTreeMap::new();
        color.insert(members[0], false);
        let mut stack = vec![members[0]];
        while let Some(x) = stack.pop() {
            for &(a, b) in &edges {
                let other = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                let cx = color[&x];
                match color.get(&other) {
                    None => {
                        color.insert(other, !cx);
                        stack.push(other);
                    }
                    Some(&co) => {
                        if co == cx {
                            return PairingOutcome::Refusal {
                                hypothesis: "(i)",
                                detail: format!(
                                    "same-side bracket between {} and {}",
                                    v_parts[x].0.display(),
                                    v_parts[other].0.display()
                                ),
                            };
                        }
                    }
                }
            }
        }
        // all edges of the component must share one central line
        let mut line: Option<Vec<Rat>> = None;
        for (&(a, b), l) in &edge_lines {
            if a != b && comp[a] == c {
                match &line {
                    None => line = Some(l.clone()),
                    Some(prev) if prev == l => {}
                    _ => {
                        return PairingOutcome::Refusal {
                            hypothesis: "(iii)",
                            detail: String::from("one block pairs into two central lines"),
                        }
                    }
                }
            }
        }
        let line = line.expect("component has edges");
        let entry = blocks.entry(line).or_insert_with(|| (Vec::new(), Vec::new()));
        for &i in &members {
            let side = color[&i];
            for v in &v_parts[i].1 {
                if side {
                    entry.1.push(v.clone());
                } else {
                    entry.0.push(v.clone());
                }
            }
        }
    }

    // nondegeneracy of each block pairing
    let mut result = Vec::new();
    let mut lines_span = Subspace::zero(n);
    for (line, (u, up)) in &blocks {
        if u.len() != up.len() {
            return PairingOutcome::Refusal {
                hypothesis: "(iii)",
                detail: format!("pairing sides have dims {} and {}", u.len(), up.len()),
            };
        }
        let lead = line.iter().position(|g| !g.is_zero()).unwrap();
        let gram: Vec<Vec<Rat>> = u
            .iter()
            .map(|x| {
                up.iter()
                    .map(|y| {
                        let br = alg.bracket_vectors(x, y);
                        br[lead].clone() / line[lead].clone()
                    })
                    .collect()
            })
            .collect();
        if crate::linalg::rank(&gram) != u.len() {
            return PairingOutcome::Refusal {
                hypothesis: "(iii)",
                detail: String::from("degenerate block pairing"),
            };
        }
        lines_span = lines_span.sum(&Subspace::from_spanning(n, &[line.clone()]));
        result.push((line.clone(), u.len(), up.len()));
    }
    if lines_span.dim() != result.len() {
        return PairingOutcome::Refusal {
            hypothesis: "(iii)",
            detail: String::from("center lines of the blocks are dependent"),
        };
    }
    let abelian_dim = center.dim() - result.len();
    PairingOutcome::Decomposition {
        heisenberg: result,
        abelian_dim,
    }
}

impl Subspace {
    /// Deterministic complement of `self` inside `within`, graded along the
    /// basis axes of the algebra.
    fn complement_within(&self, alg: &NilpotentAlgebra, within: &Subspace) -> Subspace {
        let mut covered = self.intersect(within);
        let mut picked = Vec::new();
        for i in 0..alg.dim() {
            let e = alg.coordinate_vector(i);
            if within.contains(&e) && !covered.contains(&e) {
                covered = covered.sum(&Subspace::from_spanning(alg.dim(), &[e.clone()]));
                picked.push(e);
            }
        }
        Subspace::from_spanning(alg.dim(), &picked)
    }
}
