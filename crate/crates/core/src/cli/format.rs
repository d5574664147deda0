//! Plain-text instance and functor files.
//!
//! A file is a list of sections. A section starts with an upper-case
//! keyword and takes every token up to the next keyword, so rows may be
//! split over lines freely. `#` starts a comment. Undefined composites in
//! `COMPOSE` are written `-`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::fincat::{FinCategory, MorArrow, MorId, ObjId};
use crate::group::FinGroup;
use crate::homomorphism::MonoidalFunctor;
use crate::monoidal::MonoidalStructure;
use crate::report::StructureError;
use crate::twogroup::{deloop_abelian, from_crossed_module, from_group, skeletal_cyclic, CoherentData, CrossedModule};

use super::CliError;

const INSTANCE_KEYS: &[&str] = &[
    "GENERATOR",
    "OBJECTS",
    "MORPHISMS",
    "IDENTITY",
    "COMPOSE",
    "TENSOR_OB",
    "TENSOR_MOR",
    "UNIT",
    "ASSOC",
    "LUNIT",
    "RUNIT",
    "DUAL",
    "UNIT_I",
    "COUNIT_E",
];

const FUNCTOR_KEYS: &[&str] = &["OB_MAP", "MOR_MAP", "F2", "F0"];

/// A monoidal structure with optional dual data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub monoidal: MonoidalStructure,
    pub data: Option<CoherentData>,
}

struct Section {
    line: usize,
    tokens: Vec<String>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { line, msg: msg.into() }
}

fn sections(text: &str, keys: &[&str]) -> Result<BTreeMap<String, Section>, CliError> {
    let mut out: BTreeMap<String, Section> = BTreeMap::new();
    let mut current: Option<String> = None;
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        for tok in line.split_whitespace() {
            if keys.contains(&tok) {
                if out.contains_key(tok) {
                    return Err(parse_err(n + 1, format!("section {tok} appears twice")));
                }
                out.insert(tok.to_string(), Section { line: n + 1, tokens: Vec::new() });
                current = Some(tok.to_string());
            } else if tok.chars().next().is_some_and(|c| c.is_ascii_uppercase()) && !tok.contains(':') {
                return Err(parse_err(n + 1, format!("unknown section `{tok}`")));
            } else {
                let key = current
                    .as_ref()
                    .ok_or_else(|| parse_err(n + 1, format!("`{tok}` outside any section")))?;
                out.get_mut(key).expect("section was inserted").tokens.push(tok.to_string());
            }
        }
    }
    Ok(out)
}

fn take<'a>(secs: &'a BTreeMap<String, Section>, key: &str) -> Result<&'a Section, CliError> {
    secs.get(key).ok_or_else(|| parse_err(0, format!("missing section {key}")))
}

fn numbers(sec: &Section, key: &str, expected: usize) -> Result<Vec<usize>, CliError> {
    if sec.tokens.len() != expected {
        return Err(parse_err(
            sec.line,
            format!("{key} has {} entries, expected {expected}", sec.tokens.len()),
        ));
    }
    sec.tokens
        .iter()
        .map(|t| t.parse().map_err(|_| parse_err(sec.line, format!("{key}: `{t}` is not a number"))))
        .collect()
}

fn mors(sec: &Section, key: &str, expected: usize) -> Result<Vec<MorId>, CliError> {
    Ok(numbers(sec, key, expected)?.into_iter().map(MorId).collect())
}

fn objs(sec: &Section, key: &str, expected: usize) -> Result<Vec<ObjId>, CliError> {
    Ok(numbers(sec, key, expected)?.into_iter().map(ObjId).collect())
}

fn group(name: &str) -> Result<FinGroup, CliError> {
    FinGroup::by_name(name).ok_or_else(|| parse_err(0, format!("unknown group `{name}`")))
}

fn index(s: &str, what: &str) -> Result<usize, CliError> {
    s.parse().map_err(|_| parse_err(0, format!("{what} `{s}` is not a number")))
}

/// Expands a generator directive: `group:G`, `deloop:A:i:e`,
/// `xmod:G:H:t:action` or `skeletal:Zn:p`.
pub fn generate(spec: &str) -> Result<Instance, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let (m, d) = match parts.as_slice() {
        ["group", g] => from_group(&group(g)?).into_parts(),
        ["deloop", a, i, e] => deloop_abelian(&group(a)?, index(i, "unit")?, index(e, "counit")?)?,
        ["xmod", g, h, t, act] => from_crossed_module(&CrossedModule::from_names(g, h, t, act)?).into_parts(),
        ["skeletal", g, p] => {
            let n = group(g)?.order();
            if FinGroup::cyclic(n) != group(g)? {
                return Err(parse_err(0, "skeletal instances need a cyclic group Zn"));
            }
            skeletal_cyclic(n, index(p, "cocycle multiplier")?).into_parts()
        }
        _ => return Err(parse_err(0, format!("unknown generator `{spec}`"))),
    };
    Ok(Instance {
        monoidal: m,
        data: Some(d),
    })
}

/// Reads an instance file.
pub fn parse_instance(text: &str) -> Result<Instance, CliError> {
    let secs = sections(text, INSTANCE_KEYS)?;
    if let Some(g) = secs.get("GENERATOR") {
        if secs.len() > 1 {
            return Err(parse_err(g.line, "GENERATOR cannot be combined with explicit tables"));
        }
        let [spec] = g.tokens.as_slice() else {
            return Err(parse_err(g.line, "GENERATOR takes exactly one directive"));
        };
        return generate(spec);
    }
    let n = numbers(take(&secs, "OBJECTS")?, "OBJECTS", 1)?[0];
    let msec = take(&secs, "MORPHISMS")?;
    if msec.tokens.len() % 3 != 0 {
        return Err(parse_err(msec.line, "MORPHISMS needs triples `id dom cod`"));
    }
    let m = msec.tokens.len() / 3;
    let triples = numbers(msec, "MORPHISMS", 3 * m)?;
    let mut arrows = Vec::with_capacity(m);
    for (k, t) in triples.chunks(3).enumerate() {
        if t[0] != k {
            return Err(parse_err(msec.line, format!("morphism ids must count up from 0, found {}", t[0])));
        }
        arrows.push(MorArrow {
            dom: ObjId(t[1]),
            cod: ObjId(t[2]),
        });
    }
    let identity = mors(take(&secs, "IDENTITY")?, "IDENTITY", n)?;
    let csec = take(&secs, "COMPOSE")?;
    if csec.tokens.len() != m * m {
        return Err(parse_err(
            csec.line,
            format!("COMPOSE has {} entries, expected {}", csec.tokens.len(), m * m),
        ));
    }
    let compose = csec
        .tokens
        .iter()
        .map(|t| match t.as_str() {
            "-" => Ok(None),
            s => s
                .parse()
                .map(|v| Some(MorId(v)))
                .map_err(|_| parse_err(csec.line, format!("COMPOSE: `{s}` is not a number or -"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let base = Arc::new(FinCategory::new(n, arrows, identity, compose)?);
    let tensor_ob = objs(take(&secs, "TENSOR_OB")?, "TENSOR_OB", n * n)?;
    let tensor_mor = mors(take(&secs, "TENSOR_MOR")?, "TENSOR_MOR", m * m)?;
    let unit = objs(take(&secs, "UNIT")?, "UNIT", 1)?[0];
    let assoc = mors(take(&secs, "ASSOC")?, "ASSOC", n * n * n)?;
    let lunit = mors(take(&secs, "LUNIT")?, "LUNIT", n)?;
    let runit = mors(take(&secs, "RUNIT")?, "RUNIT", n)?;
    let monoidal = MonoidalStructure::from_tables(base, tensor_ob, tensor_mor, unit, assoc, lunit, runit)?;
    let present: Vec<bool> = ["DUAL", "UNIT_I", "COUNIT_E"].iter().map(|k| secs.contains_key(*k)).collect();
    let data = if present.iter().all(|&p| p) {
        Some(CoherentData::new(
            &monoidal,
            objs(&secs["DUAL"], "DUAL", n)?,
            mors(&secs["UNIT_I"], "UNIT_I", n)?,
            mors(&secs["COUNIT_E"], "COUNIT_E", n)?,
        )?)
    } else if present.iter().any(|&p| p) {
        return Err(parse_err(0, "DUAL, UNIT_I and COUNIT_E must be given together"));
    } else {
        None
    };
    Ok(Instance { monoidal, data })
}

fn row<T: std::fmt::Display>(out: &mut String, items: impl IntoIterator<Item = T>) {
    let line: Vec<String> = items.into_iter().map(|v| v.to_string()).collect();
    let _ = writeln!(out, "{}", line.join(" "));
}

/// Writes every table explicitly, one row per first argument.
pub fn serialize_instance(inst: &Instance) -> String {
    let m = &inst.monoidal;
    let c = m.base();
    let (n, k) = (c.object_count(), c.morphism_count());
    let mut out = String::new();
    let _ = writeln!(out, "OBJECTS {n}");
    out.push_str("MORPHISMS\n");
    for f in c.morphisms() {
        let a = c.arrow(f);
        let _ = writeln!(out, "{} {} {}", f.0, a.dom.0, a.cod.0);
    }
    out.push_str("IDENTITY ");
    row(&mut out, c.identities().iter().map(|f| f.0));
    out.push_str("COMPOSE\n");
    for r in c.compose_table().chunks(k.max(1)) {
        row(&mut out, r.iter().map(|g| g.map_or("-".to_string(), |g| g.0.to_string())));
    }
    out.push_str("TENSOR_OB\n");
    for x in m.objects() {
        row(&mut out, m.objects().map(|y| m.tensor_ob(x, y).0));
    }
    out.push_str("TENSOR_MOR\n");
    for f in c.morphisms() {
        row(&mut out, c.morphisms().map(|g| m.tensor_mor(f, g).0));
    }
    let _ = writeln!(out, "UNIT {}", m.unit().0);
    out.push_str("ASSOC\n");
    for r in m.assoc_table().chunks(n.max(1)) {
        row(&mut out, r.iter().map(|f| f.0));
    }
    out.push_str("LUNIT ");
    row(&mut out, m.lunit_table().iter().map(|f| f.0));
    out.push_str("RUNIT ");
    row(&mut out, m.runit_table().iter().map(|f| f.0));
    if let Some(d) = &inst.data {
        out.push_str("DUAL ");
        row(&mut out, d.duals().iter().map(|x| x.0));
        out.push_str("UNIT_I ");
        row(&mut out, d.unit_table().iter().map(|f| f.0));
        out.push_str("COUNIT_E ");
        row(&mut out, d.counit_table().iter().map(|f| f.0));
    }
    out
}

/// Reads a functor file (`OB_MAP`, `MOR_MAP`, `F2`, `F0`) between two instances.
pub fn parse_functor(text: &str, source: &Instance, target: &Instance) -> Result<MonoidalFunctor, CliError> {
    let secs = sections(text, FUNCTOR_KEYS)?;
    let (n, k) = (source.monoidal.object_count(), source.monoidal.base().morphism_count());
    let ob = objs(take(&secs, "OB_MAP")?, "OB_MAP", n)?;
    let mor = mors(take(&secs, "MOR_MAP")?, "MOR_MAP", k)?;
    let f2 = mors(take(&secs, "F2")?, "F2", n * n)?;
    let f0 = mors(take(&secs, "F0")?, "F0", 1)?[0];
    Ok(MonoidalFunctor::new(
        source.monoidal.clone(),
        target.monoidal.clone(),
        ob,
        mor,
        f2,
        f0,
    )?)
}

pub fn serialize_functor(f: &MonoidalFunctor) -> String {
    let mut out = String::new();
    out.push_str("OB_MAP ");
    row(&mut out, f.functor().ob_map().iter().map(|x| x.0));
    out.push_str("MOR_MAP ");
    row(&mut out, f.functor().mor_map().iter().map(|g| g.0));
    out.push_str("F2 ");
    row(&mut out, f.f2_table().iter().map(|g| g.0));
    let _ = writeln!(out, "F0 {}", f.f0().0);
    out
}

impl From<StructureError> for CliError {
    fn from(e: StructureError) -> Self {
        CliError::Structure(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_round_trip() {
        for spec in ["group:Z2", "group:S3", "deloop:Z3:1:1", "xmod:Z2:Z2:id:trivial", "skeletal:Z3:1"] {
            let inst = generate(spec).unwrap();
            let text = serialize_instance(&inst);
            let again = parse_instance(&text).unwrap();
            assert_eq!(again, inst, "{spec}");
            assert_eq!(serialize_instance(&again), text);
        }
    }

    #[test]
    fn directive_file() {
        let inst = parse_instance("# comment\nGENERATOR deloop:Z3:1:2\n").unwrap();
        assert_eq!(inst.data.unwrap().counit_e(ObjId(0)), MorId(2));
        assert!(parse_instance("GENERATOR group:Z2\nOBJECTS 2\n").is_err());
        assert!(parse_instance("GENERATOR group:Q8\n").is_err());
        assert!(parse_instance("GENERATOR deloop:S3:0:0\n").is_err());
    }

    #[test]
    fn truncated_and_malformed() {
        let text = serialize_instance(&generate("group:Z2").unwrap());
        let cut = &text[..text.len() / 2];
        assert!(parse_instance(cut).is_err());
        assert!(parse_instance(&text.replace("UNIT_I", "UNIT_J")).is_err());
        let no_dual: String = text.lines().filter(|l| !l.starts_with("DUAL")).map(|l| format!("{l}\n")).collect();
        assert!(parse_instance(&no_dual).is_err());
    }

    #[test]
    fn functor_round_trip() {
        let inst = generate("deloop:Z3:0:0").unwrap();
        let f = parse_functor("OB_MAP 0\nMOR_MAP 0 1 2\nF2 1\nF0 2\n", &inst, &inst).unwrap();
        assert_eq!(parse_functor(&serialize_functor(&f), &inst, &inst).unwrap(), f);
        assert!(parse_functor("OB_MAP 0\nMOR_MAP 0 1\nF2 1\nF0 2\n", &inst, &inst).is_err());
    }
}
