//! Resolution of documents into engine values.

use std::collections::{BTreeMap, HashMap};

use abcolim_core::abgrp::{AbHom, FGAbGroup, IntMatrix};
use abcolim_core::fincat::{group_as_category, validate_category, Category, FinCategory, FinFunctor, FinGroup};
use abcolim_core::setdiag::{FinSet, SetFunctor};
use abcolim_core::{AbDiagram, Family, GModule};

use crate::document::*;
use crate::error::CliError;

type Result<T> = std::result::Result<T, CliError>;

fn index_of(names: &[String], path: &str) -> Result<HashMap<String, usize>> {
    let mut out = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if out.insert(n.clone(), i).is_some() {
            return Err(CliError::schema(format!("{path}[{i}]"), format!("duplicate name `{n}`")));
        }
    }
    Ok(out)
}

fn resolve(names: &HashMap<String, usize>, name: &str, path: &str) -> Result<usize> {
    names.get(name).copied().ok_or_else(|| CliError::reference(name, path))
}

fn object_names(cat: &FinCategory) -> HashMap<String, usize> {
    (0..cat.object_count()).map(|c| (cat.object_label(c).to_string(), c)).collect()
}

fn morphism_names(cat: &FinCategory) -> HashMap<String, usize> {
    let mut out: HashMap<String, usize> = (0..cat.morphism_count()).map(|f| (cat.morphism_label(f).to_string(), f)).collect();
    for c in 0..cat.object_count() {
        out.entry(format!("id_{}", cat.object_label(c))).or_insert(cat.identity(c));
    }
    out
}

// ---- categories ----

pub fn build_category(doc: &CategoryDoc, path: &str) -> Result<FinCategory> {
    let forms = [
        doc.objects.is_some(),
        doc.poset.is_some(),
        doc.product.is_some(),
        doc.group.is_some(),
        doc.shape.is_some(),
    ];
    if forms.iter().filter(|&&b| b).count() != 1 {
        return Err(CliError::schema(path, "give exactly one of objects, poset, product, group, shape"));
    }
    if doc.objects.is_none() && (doc.morphisms.is_some() || doc.composition.is_some() || doc.generators.is_some()) {
        return Err(CliError::schema(path, "morphisms, composition and generators require objects"));
    }
    if let Some(objects) = &doc.objects {
        return explicit_category(doc, objects, path);
    }
    if let Some(poset) = &doc.poset {
        let names = index_of(&poset.objects, &format!("{path}.poset.objects"))?;
        let covers = poset
            .covers
            .iter()
            .enumerate()
            .map(|(i, [a, b])| {
                let p = format!("{path}.poset.covers[{i}]");
                Ok((resolve(&names, a, &p)?, resolve(&names, b, &p)?))
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(FinCategory::poset(poset.objects.clone(), &covers)?);
    }
    if let Some(factors) = &doc.product {
        if factors.len() < 2 {
            return Err(CliError::schema(format!("{path}.product"), "a product needs at least two factors"));
        }
        let mut out = build_category(&factors[0], &format!("{path}.product[0]"))?;
        for (i, f) in factors.iter().enumerate().skip(1) {
            out = FinCategory::product(&out, &build_category(f, &format!("{path}.product[{i}]"))?);
        }
        return Ok(out);
    }
    if let Some(group) = &doc.group {
        return Ok(group_as_category(&build_group_table(group, &format!("{path}.group"))?));
    }
    let shape = doc.shape.as_deref().expect("one form is present");
    named_shape(shape).ok_or_else(|| CliError::schema(format!("{path}.shape"), format!("unknown shape `{shape}`")))
}

fn named_shape(shape: &str) -> Option<FinCategory> {
    let sized = |prefix: &str| shape.strip_prefix(prefix).and_then(|n| n.parse::<usize>().ok());
    match shape {
        "terminal" => Some(FinCategory::terminal()),
        "parallel" => Some(FinCategory::parallel_pair()),
        "span" => Some(FinCategory::span()),
        "cospan" => Some(FinCategory::cospan()),
        _ => {
            if let Some(n) = sized("chain:").filter(|&n| n > 0) {
                Some(FinCategory::chain(n))
            } else {
                sized("discrete:").map(FinCategory::discrete)
            }
        }
    }
}

fn explicit_category(doc: &CategoryDoc, objects: &[String], path: &str) -> Result<FinCategory> {
    let obj = index_of(objects, &format!("{path}.objects"))?;
    let k = objects.len();
    let mut labels: Vec<(String, usize, usize)> = objects.iter().enumerate().map(|(i, o)| (format!("id_{o}"), i, i)).collect();
    for (i, m) in doc.morphisms.iter().flatten().enumerate() {
        let p = format!("{path}.morphisms[{i}]");
        labels.push((m.name.clone(), resolve(&obj, &m.dom, &format!("{p}.dom"))?, resolve(&obj, &m.cod, &format!("{p}.cod"))?));
    }
    let names: Vec<String> = labels.iter().map(|l| l.0.clone()).collect();
    let mor = index_of(&names, &format!("{path}.morphisms"))?;
    let (dom, cod): (Vec<usize>, Vec<usize>) = labels.iter().map(|l| (l.1, l.2)).unzip();

    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, [g, f, gf]) in doc.composition.iter().flatten().enumerate() {
        let p = format!("{path}.composition[{i}]");
        let (g, f, gf) = (resolve(&mor, g, &p)?, resolve(&mor, f, &p)?, resolve(&mor, gf, &p)?);
        if dom[g] != cod[f] {
            return Err(CliError::schema(p, format!("`{}` and `{}` are not composable", names[g], names[f])));
        }
        if table.insert((g, f), gf).is_some_and(|prev| prev != gf) {
            return Err(CliError::schema(p, "composite given twice with different values"));
        }
    }
    for f in 0..names.len() {
        table.entry((f, dom[f])).or_insert(f);
        table.entry((cod[f], f)).or_insert(f);
    }
    for f in k..names.len() {
        for g in k..names.len() {
            if dom[g] == cod[f] && !table.contains_key(&(g, f)) {
                return Err(CliError::schema(
                    format!("{path}.composition"),
                    format!("missing composite of `{}` after `{}`", names[g], names[f]),
                ));
            }
        }
    }
    let generators = match &doc.generators {
        None => None,
        Some(gens) => Some(
            gens.iter()
                .enumerate()
                .map(|(i, g)| resolve(&mor, g, &format!("{path}.generators[{i}]")))
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    let triples: Vec<(usize, usize, usize)> = table.into_iter().map(|((g, f), gf)| (g, f, gf)).collect();
    let cat = FinCategory::from_parts(objects.to_vec(), labels, (0..k).collect(), triples, generators)?;
    if let Some(v) = validate_category(&cat).violations.first() {
        return Err(CliError::schema(path, v.to_string()));
    }
    Ok(cat)
}

pub fn build_group_table(doc: &GroupTableDoc, path: &str) -> Result<FinGroup> {
    match (doc.cyclic, &doc.elements, &doc.table) {
        (Some(n), None, None) if n >= 1 => Ok(FinGroup::cyclic(n)),
        (Some(_), None, None) => Err(CliError::schema(format!("{path}.cyclic"), "order must be positive")),
        (None, Some(elements), Some(table)) => {
            let names = index_of(elements, &format!("{path}.elements"))?;
            let rows = table
                .iter()
                .enumerate()
                .map(|(a, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(b, x)| resolve(&names, x, &format!("{path}.table[{a}][{b}]")))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(FinGroup::new(elements.clone(), rows)?)
        }
        _ => Err(CliError::schema(path, "give either cyclic or both elements and table")),
    }
}

// ---- functors and set diagrams ----

/// Entries by morphism; only identities may be left out.
fn per_morphism<'a, T>(cat: &FinCategory, given: &'a BTreeMap<String, T>, path: &str) -> Result<Vec<Option<&'a T>>> {
    let names = morphism_names(cat);
    let mut out: Vec<Option<&T>> = vec![None; cat.morphism_count()];
    for (name, value) in given {
        let f = resolve(&names, name, path)?;
        out[f] = Some(value);
    }
    if let Some(f) = (0..out.len()).find(|&f| out[f].is_none() && !cat.is_identity(f)) {
        return Err(CliError::schema(format!("{path}.{}", cat.morphism_label(f)), "missing entry"));
    }
    Ok(out)
}

fn per_object<'a, T>(cat: &FinCategory, given: &'a BTreeMap<String, T>, path: &str) -> Result<Vec<&'a T>> {
    let names = object_names(cat);
    let mut out: Vec<Option<&T>> = vec![None; cat.object_count()];
    for (name, value) in given {
        out[resolve(&names, name, path)?] = Some(value);
    }
    out.into_iter()
        .enumerate()
        .map(|(c, v)| v.ok_or_else(|| CliError::schema(format!("{path}.{}", cat.object_label(c)), "missing entry")))
        .collect()
}

pub fn build_functor(doc: &FunctorDoc) -> Result<FinFunctor> {
    let source = build_category(&doc.source, "source")?;
    let target = build_category(&doc.target, "target")?;
    let tobj = object_names(&target);
    let tmor = morphism_names(&target);
    let on_obj = per_object(&source, &doc.objects, "objects")?
        .into_iter()
        .map(|name| resolve(&tobj, name, "objects"))
        .collect::<Result<Vec<_>>>()?;
    let given = per_morphism(&source, &doc.morphisms, "morphisms")?;
    let on_mor = given
        .iter()
        .enumerate()
        .map(|(f, name)| match name {
            Some(name) => resolve(&tmor, name, &format!("morphisms.{}", source.morphism_label(f))),
            None => Ok(target.identity(on_obj[source.dom(f)])),
        })
        .collect::<Result<Vec<_>>>()?;
    let functor = FinFunctor::new(source, target, on_obj, on_mor)?;
    if let Some(v) = functor.validate().violations.first() {
        return Err(CliError::schema("morphisms", v.to_string()));
    }
    Ok(functor)
}

pub fn build_set_diagram(doc: &SetDiagramDoc) -> Result<SetFunctor> {
    let base = build_category(&doc.base, "base")?;
    let sets = per_object(&base, &doc.sets, "sets")?
        .into_iter()
        .map(|s| match s {
            SetDoc::Size(n) => Ok(FinSet::new(*n)),
            SetDoc::Labels(l) => Ok(FinSet::labelled(l.clone())?),
        })
        .collect::<Result<Vec<_>>>()?;
    let given = per_morphism(&base, &doc.maps, "maps")?;
    let maps = given
        .iter()
        .enumerate()
        .map(|(f, t)| t.cloned().unwrap_or_else(|| (0..sets[base.dom(f)].size()).collect()))
        .collect();
    let d = SetFunctor::new(base, sets, maps)?;
    if let Some(v) = d.validate().violations.first() {
        return Err(CliError::schema("maps", v.to_string()));
    }
    Ok(d)
}

// ---- abelian groups ----

fn matrix(rows: usize, columns: &[Column], path: &str) -> Result<IntMatrix> {
    if let Some(j) = columns.iter().position(|c| c.len() != rows) {
        return Err(CliError::schema(format!("{path}[{j}]"), format!("column has {} entries, expected {rows}", columns[j].len())));
    }
    Ok(IntMatrix::from_columns(rows, columns))
}

pub fn build_group(doc: &GroupDoc, path: &str) -> Result<FGAbGroup> {
    Ok(FGAbGroup::from_presentation(matrix(doc.generators, &doc.relations, &format!("{path}.relations"))?))
}

pub fn build_hom(source: &FGAbGroup, target: &FGAbGroup, images: &[Column], path: &str) -> Result<AbHom> {
    if images.len() != source.generators() {
        return Err(CliError::schema(path, format!("expected {} images, found {}", source.generators(), images.len())));
    }
    let m = matrix(target.generators(), images, path)?;
    let h = AbHom::new(source.clone(), target.clone(), m)?;
    if let Some(v) = h.validate().violations.first() {
        return Err(CliError::schema(path, v.to_string()));
    }
    Ok(h)
}

pub fn build_hom_doc(doc: &HomDoc) -> Result<AbHom> {
    let source = build_group(&doc.source, "source")?;
    let target = build_group(&doc.target, "target")?;
    build_hom(&source, &target, &doc.images, "images")
}

fn ab_diagram_on(
    base: &FinCategory,
    groups: &BTreeMap<String, GroupDoc>,
    maps: &BTreeMap<String, Vec<Column>>,
    path: &str,
) -> Result<AbDiagram> {
    let groups = per_object(base, groups, &format!("{path}groups"))?
        .into_iter()
        .enumerate()
        .map(|(c, g)| build_group(g, &format!("{path}groups.{}", base.object_label(c))))
        .collect::<Result<Vec<_>>>()?;
    let given = per_morphism(base, maps, &format!("{path}maps"))?;
    let maps = given
        .iter()
        .enumerate()
        .map(|(f, images)| {
            let (s, t) = (&groups[base.dom(f)], &groups[base.cod(f)]);
            match images {
                Some(images) => build_hom(s, t, images, &format!("{path}maps.{}", base.morphism_label(f))),
                None => Ok(AbHom::identity(s)),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let d = AbDiagram::new(base.clone(), groups, maps)?;
    if let Some(v) = d.validate().violations.first() {
        return Err(CliError::schema(format!("{path}maps"), v.to_string()));
    }
    Ok(d)
}

/// A diagram, and the target and components of its morphism when present.
pub type DiagramWithMorphism = (AbDiagram, Option<(AbDiagram, Vec<AbHom>)>);

pub fn build_ab_diagram(doc: &AbDiagramDoc) -> Result<DiagramWithMorphism> {
    let base = build_category(&doc.base, "base")?;
    let d = ab_diagram_on(&base, &doc.groups, &doc.maps, "")?;
    let Some(m) = &doc.morphism else { return Ok((d, None)) };
    let e = ab_diagram_on(&base, &m.groups, &m.maps, "morphism.")?;
    let eta = per_object(&base, &m.components, "morphism.components")?
        .into_iter()
        .enumerate()
        .map(|(c, images)| build_hom(&d.groups[c], &e.groups[c], images, &format!("morphism.components.{}", base.object_label(c))))
        .collect::<Result<Vec<_>>>()?;
    Ok((d, Some((e, eta))))
}

fn module(group: &FinGroup, carrier: &GroupDoc, action: &BTreeMap<String, Vec<Column>>, path: &str) -> Result<GModule> {
    let carrier = build_group(carrier, &format!("{path}carrier"))?;
    let names: HashMap<String, usize> = group.labels().iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
    let gens = action
        .iter()
        .map(|(name, images)| {
            let p = format!("{path}action.{name}");
            Ok((resolve(&names, name, &p)?, build_hom(&carrier, &carrier, images, &p)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GModule::from_generators(group.clone(), carrier, &gens)?)
}

pub fn build_gmodule(doc: &GModuleDoc) -> Result<(GModule, Option<(GModule, AbHom)>)> {
    let group = build_group_table(&doc.group, "group")?;
    let m = module(&group, &doc.carrier, &doc.action, "")?;
    let Some(t) = &doc.morphism else { return Ok((m, None)) };
    let n = module(&group, &t.carrier, &t.action, "morphism.")?;
    let eta = build_hom(&m.carrier, &n.carrier, &t.images, "morphism.images")?;
    Ok((m, Some((n, eta))))
}

fn family_on(index: &FinSet, names: &[String], groups: &BTreeMap<String, GroupDoc>, path: &str) -> Result<Family> {
    let lookup = index_of(names, "index")?;
    let mut out: Vec<Option<FGAbGroup>> = vec![None; names.len()];
    for (name, g) in groups {
        let i = resolve(&lookup, name, &format!("{path}groups"))?;
        out[i] = Some(build_group(g, &format!("{path}groups.{name}"))?);
    }
    let groups = out
        .into_iter()
        .enumerate()
        .map(|(i, g)| g.ok_or_else(|| CliError::schema(format!("{path}groups.{}", names[i]), "missing entry")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Family::new(index.clone(), groups)?)
}

/// A family, and the target and components of its morphism when present.
pub type FamilyWithMorphism = (Family, Option<(Family, Vec<AbHom>)>);

pub fn build_family(doc: &FamilyDoc) -> Result<FamilyWithMorphism> {
    let index = FinSet::labelled(doc.index.clone())?;
    let a = family_on(&index, &doc.index, &doc.groups, "")?;
    let Some(m) = &doc.morphism else { return Ok((a, None)) };
    let b = family_on(&index, &doc.index, &m.groups, "morphism.")?;
    let lookup = index_of(&doc.index, "index")?;
    let mut eta: Vec<Option<AbHom>> = vec![None; a.len()];
    for (name, images) in &m.components {
        let p = format!("morphism.components.{name}");
        let i = resolve(&lookup, name, &p)?;
        eta[i] = Some(build_hom(&a.groups[i], &b.groups[i], images, &p)?);
    }
    let eta = eta
        .into_iter()
        .enumerate()
        .map(|(i, h)| h.ok_or_else(|| CliError::schema(format!("morphism.components.{}", doc.index[i]), "missing entry")))
        .collect::<Result<Vec<_>>>()?;
    Ok((a, Some((b, eta))))
}

/// The factors of a product base, for commands that need them.
pub fn product_factors(doc: &CategoryDoc) -> Result<(FinCategory, &CategoryDoc)> {
    match doc.product.as_deref() {
        Some([first, second]) => Ok((build_category(first, "base.product[0]")?, second)),
        _ => Err(CliError::schema("base", "expected a product of exactly two categories")),
    }
}
