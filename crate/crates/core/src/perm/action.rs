use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::{PermError, PermGroup, Permutation, StabChain};

/// Largest coset-action index accepted.
pub const MAX_INDEX: u128 = 100_000;
/// Largest domain built by the combinatorial constructors.
pub const MAX_DOMAIN: u128 = 2_000_000;

/// What a point of an action's domain stands for. Points inside labels are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PointLabel {
    Point(usize),
    Subset(Vec<usize>),
    /// Canonical key of a right coset: least base image over the coset.
    Coset(Vec<usize>),
    /// `(delta, block)` in an imprimitive wreath product.
    Pair(usize, usize),
    Tuple(Vec<usize>),
    Partition(Vec<Vec<usize>>),
    Product(usize, usize),
    Union { part: usize, index: usize },
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[usize]| {
            xs.iter()
                .map(|x| (x + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            PointLabel::Point(x) => write!(f, "{}", x + 1),
            PointLabel::Subset(s) => write!(f, "{{{}}}", list(s)),
            PointLabel::Coset(k) => write!(f, "H[{}]", list(k)),
            PointLabel::Pair(d, i) => write!(f, "({},{})", d + 1, i + 1),
            PointLabel::Tuple(t) => write!(f, "({})", list(t)),
            PointLabel::Partition(p) => {
                let blocks: Vec<String> = p.iter().map(|b| list(b)).collect();
                write!(f, "{{{}}}", blocks.join("|"))
            }
            PointLabel::Product(i, j) => write!(f, "<{},{}>", i + 1, j + 1),
            PointLabel::Union { part, index } => write!(f, "{}.{}", part + 1, index + 1),
        }
    }
}

/// Kind of domain, keeping what is needed to act with arbitrary group elements.
#[derive(Clone)]
pub enum ActionDomain {
    Natural,
    KSubsets(usize),
    Cosets(Arc<CosetData>),
    Regular(Arc<CosetData>),
    WreathImprimitive,
    WreathProduct,
    UniformPartitions(usize),
    DirectProduct(Arc<(GroupAction, GroupAction)>),
    DisjointUnion(Arc<(GroupAction, GroupAction)>),
    Restricted(Arc<GroupAction>),
    Custom,
}

impl fmt::Debug for ActionDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl ActionDomain {
    pub fn tag(&self) -> String {
        match self {
            ActionDomain::Natural => "natural".into(),
            ActionDomain::KSubsets(k) => format!("ksets:{k}"),
            ActionDomain::Cosets(_) => "cosets".into(),
            ActionDomain::Regular(_) => "regular".into(),
            ActionDomain::WreathImprimitive => "wreath-imp".into(),
            ActionDomain::WreathProduct => "wreath-prod".into(),
            ActionDomain::UniformPartitions(k) => format!("partitions:{k}"),
            ActionDomain::DirectProduct(_) => "direct-product".into(),
            ActionDomain::DisjointUnion(_) => "disjoint-union".into(),
            ActionDomain::Restricted(a) => format!("restricted {}", a.domain.tag()),
            ActionDomain::Custom => "custom".into(),
        }
    }
}

pub struct CosetData {
    base: Vec<usize>,
    sub_chain: StabChain,
    index: HashMap<Vec<usize>, usize>,
}

/// A group together with an action on a finite domain, given by the induced
/// permutation of every generator.
#[derive(Clone)]
pub struct GroupAction {
    group: PermGroup,
    domain: ActionDomain,
    labels: Vec<PointLabel>,
    induced: Vec<Permutation>,
    induced_group: OnceLock<PermGroup>,
    index: Option<Arc<HashMap<PointLabel, usize>>>,
}

impl fmt::Debug for GroupAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupAction({} on {} points, group degree {})",
            self.domain.tag(),
            self.size(),
            self.group.degree()
        )
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut r = 1u128;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

fn check_domain(size: u128) -> Result<(), PermError> {
    if size > MAX_DOMAIN {
        return Err(PermError::DomainTooLarge(size));
    }
    Ok(())
}

impl GroupAction {
    /// An action from explicit induced generators, one per group generator.
    pub fn from_induced(
        group: PermGroup,
        labels: Vec<PointLabel>,
        induced: Vec<Permutation>,
    ) -> Result<GroupAction, PermError> {
        let n = labels.len();
        if induced.len() != group.gens_or_identity().len() {
            return Err(PermError::BadParameter(
                "one induced permutation per generator is required".into(),
            ));
        }
        for p in &induced {
            if p.degree() != n {
                return Err(PermError::DegreeMismatch {
                    expected: n,
                    got: p.degree(),
                });
            }
        }
        Ok(GroupAction::assemble(group, ActionDomain::Custom, labels, induced))
    }

    fn assemble(
        group: PermGroup,
        domain: ActionDomain,
        labels: Vec<PointLabel>,
        induced: Vec<Permutation>,
    ) -> GroupAction {
        GroupAction {
            group,
            domain,
            labels,
            induced,
            induced_group: OnceLock::new(),
            index: None,
        }
    }

    fn with_index(mut self) -> GroupAction {
        let map = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        self.index = Some(Arc::new(map));
        self
    }

    pub fn natural(group: &PermGroup) -> GroupAction {
        let n = group.degree();
        GroupAction::assemble(
            group.clone(),
            ActionDomain::Natural,
            (0..n).map(PointLabel::Point).collect(),
            group.gens_or_identity(),
        )
    }

    /// Action on `k`-subsets, listed in lexicographic order.
    pub fn ksubsets(group: &PermGroup, k: usize) -> Result<GroupAction, PermError> {
        let n = group.degree();
        if k > n {
            return Err(PermError::BadParameter(format!("k = {k} exceeds degree {n}")));
        }
        check_domain(binomial(n, k))?;
        let mut subsets = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            subsets.push(cur.clone());
            let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
                break;
            };
            cur[i] += 1;
            for j in i + 1..k {
                cur[j] = cur[j - 1] + 1;
            }
        }
        let index: HashMap<Vec<usize>, usize> =
            subsets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let image = |g: &Permutation| -> Permutation {
            let imgs = subsets
                .iter()
                .map(|s| {
                    let mut t: Vec<usize> = s.iter().map(|&x| g.apply(x)).collect();
                    t.sort_unstable();
                    index[&t] as u32
                })
                .collect();
            Permutation::from_images_unchecked(imgs)
        };
        let induced = group.gens_or_identity().iter().map(image).collect();
        Ok(GroupAction::assemble(
            group.clone(),
            ActionDomain::KSubsets(k),
            subsets.into_iter().map(PointLabel::Subset).collect(),
            induced,
        )
        .with_index())
    }

    /// Action on the right cosets of the subgroup generated by `sub_gens`.
    /// The subgroup itself is point 0; the other cosets follow in order of
    /// their canonical keys.
    pub fn cosets(group: &PermGroup, sub_gens: &[Permutation]) -> Result<GroupAction, PermError> {
        let (data, labels, induced) = coset_action(group, sub_gens)?;
        Ok(GroupAction::assemble(group.clone(), ActionDomain::Cosets(data), labels, induced))
    }

    pub fn regular(group: &PermGroup) -> Result<GroupAction, PermError> {
        let (data, labels, induced) = coset_action(group, &[])?;
        Ok(GroupAction::assemble(group.clone(), ActionDomain::Regular(data), labels, induced))
    }

    /// `K wr L` on `Delta x Lambda`; the point `(delta, i)` has index `i * |Delta| + delta`.
    pub fn wreath_imprimitive(k: &PermGroup, l: &PermGroup) -> Result<GroupAction, PermError> {
        let (kd, ld) = (k.degree(), l.degree());
        let n = kd * ld;
        check_domain(n as u128)?;
        let mut gens = Vec::new();
        for orbit in l.orbits() {
            let r = orbit[0];
            for kg in k.gens() {
                let imgs = (0..n)
                    .map(|idx| {
                        let (i, d) = (idx / kd, idx % kd);
                        if i == r {
                            (i * kd + kg.apply(d)) as u32
                        } else {
                            idx as u32
                        }
                    })
                    .collect();
                gens.push(Permutation::from_images_unchecked(imgs));
            }
        }
        for lg in l.gens() {
            let imgs = (0..n)
                .map(|idx| (lg.apply(idx / kd) * kd + idx % kd) as u32)
                .collect();
            gens.push(Permutation::from_images_unchecked(imgs));
        }
        let group = PermGroup::new(n, gens)?;
        let labels = (0..n).map(|idx| PointLabel::Pair(idx % kd, idx / kd)).collect();
        Ok(GroupAction::assemble(
            group.clone(),
            ActionDomain::WreathImprimitive,
            labels,
            group.gens_or_identity(),
        ))
    }

    /// `K wr L` on `Delta^l`; the tuple `(d_1, ..., d_l)` has index
    /// `sum d_i |Delta|^(i-1)`, and `sigma` in `L` moves coordinate `i` to `i^sigma`.
    pub fn wreath_product(k: &PermGroup, l: &PermGroup) -> Result<GroupAction, PermError> {
        let (kd, ld) = (k.degree(), l.degree());
        let size = (kd as u128).checked_pow(ld as u32).unwrap_or(u128::MAX);
        check_domain(size)?;
        let n = size as usize;
        let decode = |mut idx: usize| -> Vec<usize> {
            (0..ld)
                .map(|_| {
                    let d = idx % kd;
                    idx /= kd;
                    d
                })
                .collect()
        };
        let encode = |t: &[usize]| -> usize { t.iter().rev().fold(0, |acc, &d| acc * kd + d) };
        let mut gens = Vec::new();
        for orbit in l.orbits() {
            let r = orbit[0];
            for kg in k.gens() {
                let imgs = (0..n)
                    .map(|idx| {
                        let mut t = decode(idx);
                        t[r] = kg.apply(t[r]);
                        encode(&t) as u32
                    })
                    .collect();
                gens.push(Permutation::from_images_unchecked(imgs));
            }
        }
        for lg in l.gens() {
            let imgs = (0..n)
                .map(|idx| {
                    let t = decode(idx);
                    let mut u = vec![0; ld];
                    for (i, &d) in t.iter().enumerate() {
                        u[lg.apply(i)] = d;
                    }
                    encode(&u) as u32
                })
                .collect();
            gens.push(Permutation::from_images_unchecked(imgs));
        }
        let group = PermGroup::new(n, gens)?;
        let labels = (0..n).map(|idx| PointLabel::Tuple(decode(idx))).collect();
        Ok(GroupAction::assemble(
            group.clone(),
            ActionDomain::WreathProduct,
            labels,
            group.gens_or_identity(),
        ))
    }

    /// Action on partitions of the points into blocks of size `k`.
    pub fn uniform_partitions(group: &PermGroup, k: usize) -> Result<GroupAction, PermError> {
        let n = group.degree();
        if k == 0 || !n.is_multiple_of(k) {
            return Err(PermError::BadParameter(format!(
                "block size {k} does not divide degree {n}"
            )));
        }
        let mut count = 1u128;
        let mut left = n;
        while left > 0 {
            count *= binomial(left - 1, k - 1);
            left -= k;
        }
        check_domain(count)?;
        let mut parts = Vec::new();
        let mut used = vec![false; n];
        let mut blocks = Vec::new();
        enumerate_partitions(n, k, &mut used, &mut blocks, &mut parts);
        let index: HashMap<Vec<Vec<usize>>, usize> =
            parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let induced = group
            .gens_or_identity()
            .iter()
            .map(|g| {
                let imgs = parts
                    .iter()
                    .map(|p| index[&canonical_partition(p, g)] as u32)
                    .collect();
                Permutation::from_images_unchecked(imgs)
            })
            .collect();
        Ok(GroupAction::assemble(
            group.clone(),
            ActionDomain::UniformPartitions(k),
            parts.into_iter().map(PointLabel::Partition).collect(),
            induced,
        )
        .with_index())
    }

    /// `G1 x G2` acting on `Omega1 x Omega2`; `(i, j)` has index `i * |Omega2| + j`.
    pub fn direct_product(a: &GroupAction, b: &GroupAction) -> Result<GroupAction, PermError> {
        let (na, nb) = (a.size(), b.size());
        check_domain(na as u128 * nb as u128)?;
        let (da, db) = (a.group.degree(), b.group.degree());
        let mut group_gens = Vec::new();
        let mut induced = Vec::new();
        for (g, p) in a.group.gens_or_identity().iter().zip(&a.induced) {
            group_gens.push(g.shifted(0, da + db));
            let imgs = (0..na * nb)
                .map(|idx| (p.apply(idx / nb) * nb + idx % nb) as u32)
                .collect();
            induced.push(Permutation::from_images_unchecked(imgs));
        }
        for (g, p) in b.group.gens_or_identity().iter().zip(&b.induced) {
            group_gens.push(g.shifted(da, da + db));
            let imgs = (0..na * nb)
                .map(|idx| ((idx / nb) * nb + p.apply(idx % nb)) as u32)
                .collect();
            induced.push(Permutation::from_images_unchecked(imgs));
        }
        let group = PermGroup::new(da + db, group_gens)?;
        let labels = (0..na * nb).map(|idx| PointLabel::Product(idx / nb, idx % nb)).collect();
        Ok(GroupAction::assemble(
            group,
            ActionDomain::DirectProduct(Arc::new((a.clone(), b.clone()))),
            labels,
            induced,
        ))
    }

    /// The same group acting on `Omega1` and `Omega2` side by side.
    pub fn disjoint_union(a: &GroupAction, b: &GroupAction) -> Result<GroupAction, PermError> {
        if a.group.gens_or_identity() != b.group.gens_or_identity() {
            return Err(PermError::BadParameter(
                "disjoint union needs the same group generators on both sides".into(),
            ));
        }
        let (na, nb) = (a.size(), b.size());
        let induced = a
            .induced
            .iter()
            .zip(&b.induced)
            .map(|(p, r)| {
                let mut imgs: Vec<u32> = p.raw().to_vec();
                imgs.extend(r.raw().iter().map(|&x| x + na as u32));
                Permutation::from_images_unchecked(imgs)
            })
            .collect();
        let labels = (0..na)
            .map(|i| PointLabel::Union { part: 0, index: i })
            .chain((0..nb).map(|i| PointLabel::Union { part: 1, index: i }))
            .collect();
        Ok(GroupAction::assemble(
            a.group.clone(),
            ActionDomain::DisjointUnion(Arc::new((a.clone(), b.clone()))),
            labels,
            induced,
        ))
    }

    /// The induced permutation of an arbitrary element of the acting group.
    pub fn image_of(&self, g: &Permutation) -> Result<Permutation, PermError> {
        if !self.group.contains(g) {
            return Err(PermError::NotASubgroup(0));
        }
        match &self.domain {
            ActionDomain::Natural
            | ActionDomain::WreathImprimitive
            | ActionDomain::WreathProduct => Ok(g.clone()),
            ActionDomain::KSubsets(_) => Ok(self.map_labels(|l| match l {
                PointLabel::Subset(s) => {
                    let mut t: Vec<usize> = s.iter().map(|&x| g.apply(x)).collect();
                    t.sort_unstable();
                    PointLabel::Subset(t)
                }
                _ => unreachable!(),
            })),
            ActionDomain::UniformPartitions(_) => Ok(self.map_labels(|l| match l {
                PointLabel::Partition(p) => PointLabel::Partition(canonical_partition(p, g)),
                _ => unreachable!(),
            })),
            ActionDomain::Cosets(data) | ActionDomain::Regular(data) => {
                let reps = coset_reps(&self.group, data, self.size());
                let imgs = reps
                    .iter()
                    .map(|x| data.index[&data.sub_chain.min_coset_image(&x.mul(g), &data.base)] as u32)
                    .collect();
                Ok(Permutation::from_images_unchecked(imgs))
            }
            ActionDomain::DisjointUnion(parts) => {
                let (a, b) = &**parts;
                let (pa, pb) = (a.image_of(g)?, b.image_of(g)?);
                let mut imgs = pa.raw().to_vec();
                imgs.extend(pb.raw().iter().map(|&x| x + a.size() as u32));
                Ok(Permutation::from_images_unchecked(imgs))
            }
            ActionDomain::DirectProduct(parts) => {
                let (a, b) = &**parts;
                let (da, db) = (a.group.degree(), b.group.degree());
                let ga = Permutation::from_images((0..da).map(|x| g.apply(x)).collect())?;
                let gb = Permutation::from_images((da..da + db).map(|x| g.apply(x) - da).collect())?;
                let (pa, pb) = (a.image_of(&ga)?, b.image_of(&gb)?);
                let nb = b.size();
                let imgs = (0..self.size())
                    .map(|idx| (pa.apply(idx / nb) * nb + pb.apply(idx % nb)) as u32)
                    .collect();
                Ok(Permutation::from_images_unchecked(imgs))
            }
            ActionDomain::Restricted(parent) => parent.image_of(g),
            ActionDomain::Custom => {
                if let Some(i) = self.group.gens().iter().position(|h| h == g) {
                    return Ok(self.induced[i].clone());
                }
                Err(PermError::BadParameter(
                    "custom actions only know their generators' images".into(),
                ))
            }
        }
    }

    fn map_labels(&self, f: impl Fn(&PointLabel) -> PointLabel) -> Permutation {
        let index = self.index.as_ref().expect("label index");
        let imgs = self.labels.iter().map(|l| index[&f(l)] as u32).collect();
        Permutation::from_images_unchecked(imgs)
    }

    /// Restricts the action to a subgroup of the acting group.
    pub fn restrict(&self, sub: &PermGroup) -> Result<GroupAction, PermError> {
        let induced = sub
            .gens_or_identity()
            .iter()
            .map(|g| self.image_of(g))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupAction {
            group: sub.clone(),
            domain: ActionDomain::Restricted(Arc::new(self.clone())),
            labels: self.labels.clone(),
            induced,
            induced_group: OnceLock::new(),
            index: self.index.clone(),
        })
    }

    /// The action on one orbit, with points renumbered in the order given.
    pub fn on_orbit(&self, orbit: &[usize]) -> Result<GroupAction, PermError> {
        let mut pos = vec![usize::MAX; self.size()];
        for (i, &x) in orbit.iter().enumerate() {
            pos[x] = i;
        }
        let induced = self
            .induced
            .iter()
            .map(|p| {
                let imgs = orbit.iter().map(|&x| pos[p.apply(x)]).collect::<Vec<_>>();
                if imgs.contains(&usize::MAX) {
                    return Err(PermError::BadParameter("points do not form an orbit".into()));
                }
                Permutation::from_images(imgs)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let labels = orbit.iter().map(|&x| self.labels[x].clone()).collect();
        GroupAction::from_induced(self.group.clone(), labels, induced)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn domain(&self) -> &ActionDomain {
        &self.domain
    }

    pub fn labels(&self) -> &[PointLabel] {
        &self.labels
    }

    pub fn induced_gens(&self) -> &[Permutation] {
        &self.induced
    }

    /// The permutation group induced on the domain (the faithful quotient).
    pub fn induced_group(&self) -> &PermGroup {
        self.induced_group
            .get_or_init(|| PermGroup::new(self.size(), self.induced.clone()).unwrap())
    }

    pub fn is_transitive(&self) -> bool {
        self.induced_group().is_transitive()
    }

    pub fn is_primitive(&self) -> bool {
        self.induced_group().is_primitive()
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.induced_group().order() == self.size() as u128
    }
}

fn enumerate_partitions(
    n: usize,
    k: usize,
    used: &mut Vec<bool>,
    blocks: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    let Some(first) = used.iter().position(|&u| !u) else {
        out.push(blocks.clone());
        return;
    };
    used[first] = true;
    let free: Vec<usize> = (first + 1..n).filter(|&x| !used[x]).collect();
    let mut choice: Vec<usize> = (0..k - 1).collect();
    loop {
        if k - 1 <= free.len() {
            let mut block = vec![first];
            block.extend(choice.iter().map(|&c| free[c]));
            for &x in &block[1..] {
                used[x] = true;
            }
            blocks.push(block.clone());
            enumerate_partitions(n, k, used, blocks, out);
            blocks.pop();
            for &x in &block[1..] {
                used[x] = false;
            }
        }
        let m = free.len();
        let r = k - 1;
        let Some(i) = (0..r).rev().find(|&i| choice[i] + r < m + i) else {
            break;
        };
        choice[i] += 1;
        for j in i + 1..r {
            choice[j] = choice[j - 1] + 1;
        }
    }
    used[first] = false;
}

fn canonical_partition(p: &[Vec<usize>], g: &Permutation) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = p
        .iter()
        .map(|b| {
            let mut c: Vec<usize> = b.iter().map(|&x| g.apply(x)).collect();
            c.sort_unstable();
            c
        })
        .collect();
    blocks.sort_unstable();
    blocks
}

type CosetParts = (Arc<CosetData>, Vec<PointLabel>, Vec<Permutation>);

fn coset_action(group: &PermGroup, sub_gens: &[Permutation]) -> Result<CosetParts, PermError> {
    for (i, h) in sub_gens.iter().enumerate() {
        if h.degree() != group.degree() {
            return Err(PermError::DegreeMismatch {
                expected: group.degree(),
                got: h.degree(),
            });
        }
        if !group.contains(h) {
            return Err(PermError::NotASubgroup(i + 1));
        }
    }
    let n = group.degree();
    let mut base = group.chain().base();
    if base.is_empty() && n > 0 {
        base.push(0);
    }
    let sub_chain = StabChain::build(n, sub_gens, &base);
    let index_size = group.order() / sub_chain.order();
    if index_size > MAX_INDEX {
        return Err(PermError::IndexTooLarge(index_size));
    }
    let gens = group.gens_or_identity();
    let id = Permutation::identity(n);
    let mut keys = vec![sub_chain.min_coset_image(&id, &base)];
    let mut reps = vec![id];
    let mut found: HashMap<Vec<usize>, usize> = HashMap::new();
    found.insert(keys[0].clone(), 0);
    let mut i = 0;
    while i < reps.len() {
        for g in &gens {
            let y = reps[i].mul(g);
            let key = sub_chain.min_coset_image(&y, &base);
            if !found.contains_key(&key) {
                found.insert(key.clone(), reps.len());
                keys.push(key);
                reps.push(y);
            }
        }
        i += 1;
    }
    debug_assert_eq!(reps.len() as u128, index_size);
    let mut order: Vec<usize> = (1..reps.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    order.insert(0, 0);
    let mut position = vec![0usize; reps.len()];
    for (pos, &old) in order.iter().enumerate() {
        position[old] = pos;
    }
    let index: HashMap<Vec<usize>, usize> = order
        .iter()
        .enumerate()
        .map(|(pos, &old)| (keys[old].clone(), pos))
        .collect();
    let induced = gens
        .iter()
        .map(|g| {
            let mut imgs = vec![0u32; reps.len()];
            for (old, x) in reps.iter().enumerate() {
                let key = sub_chain.min_coset_image(&x.mul(g), &base);
                imgs[position[old]] = index[&key] as u32;
            }
            Permutation::from_images_unchecked(imgs)
        })
        .collect();
    let labels = order.iter().map(|&old| PointLabel::Coset(keys[old].clone())).collect();
    Ok((
        Arc::new(CosetData {
            base,
            sub_chain,
            index,
        }),
        labels,
        induced,
    ))
}

/// Recomputes coset representatives in domain order.
fn coset_reps(group: &PermGroup, data: &CosetData, size: usize) -> Vec<Permutation> {
    let n = group.degree();
    let mut reps: Vec<Option<Permutation>> = vec![None; size];
    reps[0] = Some(Permutation::identity(n));
    let mut queue = vec![0usize];
    let gens = group.gens_or_identity();
    let mut i = 0;
    while i < queue.len() {
        let x = reps[queue[i]].clone().unwrap();
        for g in &gens {
            let y = x.mul(g);
            let j = data.index[&data.sub_chain.min_coset_image(&y, &data.base)];
            if reps[j].is_none() {
                reps[j] = Some(y);
                queue.push(j);
            }
        }
        i += 1;
    }
    reps.into_iter().map(Option::unwrap).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ksubset_count_and_transitivity() {
        let a = GroupAction::ksubsets(&PermGroup::symmetric(10), 2).unwrap();
        assert_eq!(a.size(), 45);
        assert!(a.is_transitive() && a.is_primitive());
        assert_eq!(a.labels()[0], PointLabel::Subset(vec![0, 1]));
    }

    #[test]
    fn coset_action_of_s4() {
        let s4 = PermGroup::symmetric(4);
        let c4 = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        let a = GroupAction::cosets(&s4, std::slice::from_ref(&c4)).unwrap();
        assert_eq!(a.size(), 6);
        assert!(a.is_transitive());
        assert_eq!(a.induced_group().order(), 24);
        // the subgroup fixes its own coset
        let img = a.image_of(&c4).unwrap();
        assert_eq!(img.apply(0), 0);
    }

    #[test]
    fn regular_action() {
        let g = PermGroup::cyclic(6);
        let r = GroupAction::regular(&g).unwrap();
        assert_eq!(r.size(), 6);
        assert!(r.is_regular());
    }

    #[test]
    fn rejects_non_subgroup_and_large_index() {
        let a4 = PermGroup::alternating(4);
        let t = Permutation::from_cycles(4, &[vec![0, 1]]).unwrap();
        assert_eq!(
            GroupAction::cosets(&a4, &[t]).unwrap_err(),
            PermError::NotASubgroup(1)
        );
        let s10 = PermGroup::symmetric(10);
        assert!(matches!(
            GroupAction::regular(&s10),
            Err(PermError::IndexTooLarge(_))
        ));
    }

    #[test]
    fn wreath_orders() {
        let s3 = PermGroup::symmetric(3);
        let s2 = PermGroup::symmetric(2);
        let imp = GroupAction::wreath_imprimitive(&s3, &s2).unwrap();
        assert_eq!(imp.size(), 6);
        assert_eq!(imp.group().order(), 72);
        assert!(imp.is_transitive() && !imp.is_primitive());
        let prod = GroupAction::wreath_product(&s3, &s2).unwrap();
        assert_eq!(prod.size(), 9);
        assert_eq!(prod.group().order(), 72);
        assert!(prod.is_primitive());
        let c2s3 = GroupAction::wreath_imprimitive(&PermGroup::symmetric(2), &s3).unwrap();
        assert_eq!(c2s3.group().order(), 48);
    }

    #[test]
    fn partitions() {
        let a = GroupAction::uniform_partitions(&PermGroup::symmetric(6), 2).unwrap();
        assert_eq!(a.size(), 15);
        assert!(a.is_transitive());
        let b = GroupAction::uniform_partitions(&PermGroup::symmetric(6), 3).unwrap();
        assert_eq!(b.size(), 10);
        assert!(GroupAction::uniform_partitions(&PermGroup::symmetric(6), 4).is_err());
    }

    #[test]
    fn restriction_matches_direct_construction() {
        let s5 = PermGroup::symmetric(5);
        let a5 = PermGroup::alternating(5);
        let full = GroupAction::ksubsets(&s5, 2).unwrap();
        let res = full.restrict(&a5).unwrap();
        let direct = GroupAction::ksubsets(&a5, 2).unwrap();
        assert_eq!(res.induced_gens(), direct.induced_gens());
    }

    #[test]
    fn direct_product_and_union() {
        let c2 = GroupAction::natural(&PermGroup::cyclic(2));
        let c3 = GroupAction::natural(&PermGroup::cyclic(3));
        let p = GroupAction::direct_product(&c2, &c3).unwrap();
        assert_eq!(p.size(), 6);
        assert!(p.is_regular());
        let u = GroupAction::disjoint_union(&c3, &c3).unwrap();
        assert_eq!(u.size(), 6);
        assert_eq!(u.induced_group().orbits().len(), 2);
    }

    #[test]
    fn orbit_actions() {
        let a = GroupAction::ksubsets(&PermGroup::symmetric(4), 2).unwrap();
        let u = GroupAction::disjoint_union(&GroupAction::natural(&PermGroup::symmetric(4)), &a).unwrap();
        let orbits = u.induced_group().orbits();
        assert_eq!(orbits.len(), 2);
        let second = u.on_orbit(&orbits[1]).unwrap();
        assert_eq!(second.size(), 6);
        assert_eq!(second.induced_group().order(), 24);
        assert!(u.on_orbit(&[0, 4]).is_err());
    }
}
