use super::limits::{set_colimit, set_limit};
use super::{FinSet, SetFunctor};
use crate::error::{Error, Result};
use crate::fincat::{group_as_category, is_filtered, Category, FinCategory, FinFunctor, FinGroup};

/// An explicit map between two finite carriers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub source_size: usize,
    pub target_size: usize,
    pub map: Vec<usize>,
}

impl Comparison {
    /// Bijectivity by inverse search: every target element has exactly one
    /// preimage.
    pub fn is_bijection(&self) -> bool {
        if self.source_size != self.map.len() {
            return false;
        }
        let mut preimages = vec![0usize; self.target_size];
        for &y in &self.map {
            preimages[y] += 1;
        }
        preimages.iter().all(|&c| c == 1)
    }

    pub fn inverse(&self) -> Option<Vec<usize>> {
        if !self.is_bijection() {
            return None;
        }
        let mut inv = vec![0; self.target_size];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(inv)
    }
}

/// Outcome of comparing `colim_F lim_D` with `lim_D colim_F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommuteReport {
    pub colim_of_lim: FinSet,
    pub lim_of_colim: FinSet,
    pub comparison: Comparison,
    pub bijective: bool,
}

/// Builds the canonical map `colim_F lim_J D → lim_J colim_F D` for a
/// diagram on `F × J` and decides whether it is a bijection.
///
/// `F` must be filtered and `diagram.base` must equal `F × J` in the layout of
/// [`FinCategory::product`]. The map is assembled from the cone and cocone
/// legs and its well-definedness is checked on every element, not assumed.
pub fn commute_check(diagram: &SetFunctor, filtered: &FinCategory, finite: &FinCategory) -> Result<CommuteReport> {
    if !is_filtered(filtered).filtered {
        return Err(Error::Precondition("commute_check: first factor is not filtered".into()));
    }
    let product = FinCategory::product(filtered, finite);
    if diagram.base != product {
        return Err(Error::input("commute_check", "diagram base is not the product of the given factors"));
    }
    let (kf, kj) = (filtered.object_count(), finite.object_count());
    let (mf, mj) = (filtered.morphism_count(), finite.morphism_count());

    // colim over F of each column D(-, j)
    let columns: Vec<_> = (0..kj)
        .map(|j| {
            let inc = FinFunctor {
                source: filtered.clone(),
                target: product.clone(),
                on_obj: (0..kf).map(|f| f * kj + j).collect(),
                on_mor: (0..mf).map(|a| a * mj + finite.identity(j)).collect(),
            };
            set_colimit(&diagram.restrict_along(&inc).expect("inclusion targets the base"))
        })
        .collect();
    let colim_diagram = SetFunctor::new(
        finite.clone(),
        columns.iter().map(|c| c.carrier().clone()).collect(),
        (0..mj)
            .map(|delta| {
                let (j, j2) = (finite.dom(delta), finite.cod(delta));
                columns[j]
                    .representatives
                    .iter()
                    .map(|&(f, x)| {
                        let y = diagram.maps[filtered.identity(f) * mj + delta][x];
                        columns[j2].class_of(f, y)
                    })
                    .collect()
            })
            .collect(),
    )?;
    let lim_colim = set_limit(&colim_diagram);

    // lim over J of each row D(f, -)
    let rows: Vec<_> = (0..kf)
        .map(|f| {
            let inc = FinFunctor {
                source: finite.clone(),
                target: product.clone(),
                on_obj: (0..kj).map(|j| f * kj + j).collect(),
                on_mor: (0..mj).map(|d| filtered.identity(f) * mj + d).collect(),
            };
            set_limit(&diagram.restrict_along(&inc).expect("inclusion targets the base"))
        })
        .collect();
    let lim_diagram = SetFunctor::new(
        filtered.clone(),
        rows.iter().map(|r| r.carrier().clone()).collect(),
        (0..mf)
            .map(|a| {
                let (f, f2) = (filtered.dom(a), filtered.cod(a));
                rows[f]
                    .tuples
                    .iter()
                    .map(|t| {
                        let image: Vec<usize> = (0..kj)
                            .map(|j| diagram.maps[a * mj + finite.identity(j)][t[j]])
                            .collect();
                        rows[f2].index_of(&image).expect("transition maps preserve compatibility")
                    })
                    .collect()
            })
            .collect(),
    )?;
    let colim_lim = set_colimit(&lim_diagram);

    // [f, (x_j)] ↦ ([f, x_j])_j, evaluated on every element of every class
    let mut map: Vec<Option<usize>> = vec![None; colim_lim.carrier().size()];
    for (f, row) in rows.iter().enumerate() {
        for (t, tuple) in row.tuples.iter().enumerate() {
            let image: Vec<usize> = (0..kj).map(|j| columns[j].class_of(f, tuple[j])).collect();
            let target = lim_colim
                .index_of(&image)
                .ok_or_else(|| Error::Precondition("comparison tuple is not compatible".into()))?;
            let class = colim_lim.class_of(f, t);
            match map[class] {
                None => map[class] = Some(target),
                Some(prev) if prev != target => {
                    return Err(Error::Precondition("comparison map is not well defined".into()))
                }
                _ => {}
            }
        }
    }
    let comparison = Comparison {
        source_size: colim_lim.carrier().size(),
        target_size: lim_colim.carrier().size(),
        map: map.into_iter().map(|m| m.expect("every class has a member")).collect(),
    };
    let bijective = comparison.is_bijection();
    Ok(CommuteReport {
        colim_of_lim: colim_lim.carrier().clone(),
        lim_of_colim: lim_colim.carrier().clone(),
        comparison,
        bijective,
    })
}

/// Fixed points of a `G`-set, computed as the limit over the one-object
/// category of `G`. Returns the fixed elements in increasing order.
pub fn fixed_points(group: &FinGroup, action: &SetFunctor) -> Result<Vec<usize>> {
    if action.base != group_as_category(group) {
        return Err(Error::input("fixed_points", "diagram is not on the one-object category of the group"));
    }
    let lim = set_limit(action);
    Ok(lim.tuples.iter().map(|t| t[0]).collect())
}

/// The canonical map `colim(G × H) → colim G × colim H`, with pairs in the
/// target encoded as `g·|colim H| + h`.
pub fn colimit_of_product_comparison(g: &SetFunctor, h: &SetFunctor) -> Result<Comparison> {
    let gh = g.product(h)?;
    let (cg, ch, cgh) = (set_colimit(g), set_colimit(h), set_colimit(&gh));
    let nh = ch.carrier().size();
    let map = cgh
        .representatives
        .iter()
        .map(|&(s, p)| {
            let (x, y) = (p / h.size(s), p % h.size(s));
            cg.class_of(s, x) * nh + ch.class_of(s, y)
        })
        .collect();
    Ok(Comparison {
        source_size: cgh.carrier().size(),
        target_size: cg.carrier().size() * nh,
        map,
    })
}

/// The canonical map `colim(D ∘ F) → colim D`, `[c', x] ↦ [F(c'), x]`.
pub fn restricted_colimit_comparison(functor: &FinFunctor, diagram: &SetFunctor) -> Result<Comparison> {
    let restricted = diagram.restrict_along(functor)?;
    let (small, big) = (set_colimit(&restricted), set_colimit(diagram));
    let map = small
        .representatives
        .iter()
        .map(|&(c, x)| big.class_of(functor.on_obj[c], x))
        .collect();
    Ok(Comparison {
        source_size: small.carrier().size(),
        target_size: big.carrier().size(),
        map,
    })
}

/// Outcome of comparing `colim_F (fixed points)` with the fixed points of
/// `colim_F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixpointReport {
    /// Fixed points of the colimit, as classes of the colimit carrier.
    pub fixed_of_colim: Vec<usize>,
    pub colim_of_fixed: FinSet,
    /// Sends a class of `colim_of_fixed` to a position in `fixed_of_colim`.
    pub comparison: Comparison,
    pub bijective: bool,
}

/// Compares both routes for a diagram of `G`-sets on `F × B′G`, with `F`
/// filtered. Each level's fixed points come from [`fixed_points`]; the
/// action on the column colimit is induced class by class and checked for
/// well-definedness.
pub fn fixpoint_commute(filtered: &FinCategory, group: &FinGroup, diagram: &SetFunctor) -> Result<FixpointReport> {
    if !is_filtered(filtered).filtered {
        return Err(Error::Precondition("fixpoint_commute: index category is not filtered".into()));
    }
    let bg = group_as_category(group);
    let product = FinCategory::product(filtered, &bg);
    if diagram.base != product {
        return Err(Error::input("fixpoint_commute", "diagram base is not the product of the index category and the group"));
    }
    let (k, m, mg) = (filtered.object_count(), filtered.morphism_count(), bg.morphism_count());
    let e = group.identity();

    let column = FinFunctor {
        source: filtered.clone(),
        target: product.clone(),
        on_obj: (0..k).collect(),
        on_mor: (0..m).map(|a| a * mg + e).collect(),
    };
    let colim = set_colimit(&diagram.restrict_along(&column)?);
    let size = colim.carrier().size();
    let mut action = vec![vec![usize::MAX; size]; mg];
    for (g, table) in action.iter_mut().enumerate() {
        for i in 0..k {
            let act = &diagram.maps[filtered.identity(i) * mg + g];
            for (x, &gx) in act.iter().enumerate() {
                let (from, to) = (colim.class_of(i, x), colim.class_of(i, gx));
                if table[from] != usize::MAX && table[from] != to {
                    return Err(Error::Precondition("induced action on the colimit is not well defined".into()));
                }
                table[from] = to;
            }
        }
    }
    let induced = SetFunctor::new(bg.clone(), vec![FinSet::new(size)], action)?;
    let fixed_of_colim = fixed_points(group, &induced)?;

    let levels: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            let level = FinFunctor {
                source: bg.clone(),
                target: product.clone(),
                on_obj: vec![i],
                on_mor: (0..mg).map(|g| filtered.identity(i) * mg + g).collect(),
            };
            fixed_points(group, &diagram.restrict_along(&level)?)
        })
        .collect::<Result<_>>()?;
    let position = |i: usize, x: usize| levels[i].binary_search(&x).ok();
    let maps = (0..m)
        .map(|a| {
            let (s, t) = (filtered.dom(a), filtered.cod(a));
            levels[s]
                .iter()
                .map(|&x| {
                    position(t, diagram.maps[a * mg + e][x])
                        .ok_or_else(|| Error::Precondition("transition does not preserve fixed points".into()))
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let sets = levels.iter().map(|l| FinSet::new(l.len())).collect();
    let colim_fixed = set_colimit(&SetFunctor::new(filtered.clone(), sets, maps)?);

    let mut map: Vec<Option<usize>> = vec![None; colim_fixed.carrier().size()];
    for (i, level) in levels.iter().enumerate() {
        for (t, &x) in level.iter().enumerate() {
            let target = fixed_of_colim
                .binary_search(&colim.class_of(i, x))
                .map_err(|_| Error::Precondition("image of a fixed point is not fixed".into()))?;
            let class = colim_fixed.class_of(i, t);
            match map[class] {
                None => map[class] = Some(target),
                Some(prev) if prev != target => {
                    return Err(Error::Precondition("fixed-point comparison is not well defined".into()))
                }
                _ => {}
            }
        }
    }
    let comparison = Comparison {
        source_size: colim_fixed.carrier().size(),
        target_size: fixed_of_colim.len(),
        map: map.into_iter().map(|m| m.expect("every class has a member")).collect(),
    };
    let bijective = comparison.is_bijection();
    Ok(FixpointReport {
        fixed_of_colim,
        colim_of_fixed: colim_fixed.carrier().clone(),
        comparison,
        bijective,
    })
}
