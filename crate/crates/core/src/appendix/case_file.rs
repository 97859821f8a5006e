//! Plain-text description of a rigid-orbit case.
//!
//! ```text
//! name: e7-41
//! type: E7
//! map: 14 = 1 0 1 1 0 0 0      # external root index -> simple-root coordinates
//! e: x14 1, x26 1
//! t: h7 1
//! t1: h7 1
//! t1: h2 1, h5 -1
//! expect: dim_ge = 41
//! expect: t_mult 1 = 8
//! expect: weight 1 1 0 = 2
//! ```
//!
//! Labels are `h<i>` for the simple coroot `i` (1-based) and `x<k>` / `y<k>`
//! for the root vectors of `±` the root registered under `map: k`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::LieAlgebraTable;
use crate::linalg::{parse_rat, Rat};
use crate::roots::{CartanType, Root};

use super::AppendixError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub label: String,
    pub coef: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectations {
    pub dim_ge: Option<usize>,
    pub dim_z: Option<usize>,
    pub dim_le: Option<usize>,
    pub index: Option<usize>,
    pub condition: Option<u8>,
    /// Multiplicity of each eigenvalue of `ad t` on `𝔤ᵉ`.
    pub t_mult: BTreeMap<String, usize>,
    /// Multiplicity of individual `𝔱₁`-weights, keyed by the space-separated weight.
    pub weight_mult: BTreeMap<String, usize>,
    pub singular_block: Option<String>,
    pub singular_order: Option<usize>,
    pub singular_rank: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidCaseSpec {
    pub name: String,
    pub cartan_type: CartanType,
    pub root_map: BTreeMap<usize, Vec<i64>>,
    pub e: Vec<Term>,
    pub t: Vec<Term>,
    pub t1: Vec<Vec<Term>>,
    pub expect: Expectations,
}

fn perr(line: usize, msg: impl Into<String>) -> AppendixError {
    AppendixError::Parse { line, msg: msg.into() }
}

fn parse_terms(line: usize, s: &str) -> Result<Vec<Term>, AppendixError> {
    let mut out = Vec::new();
    for chunk in s.split(',') {
        let toks: Vec<&str> = chunk.split_whitespace().collect();
        match toks.as_slice() {
            [label, coef] => {
                if parse_rat(coef).is_none() {
                    return Err(perr(line, format!("bad coefficient `{coef}`")));
                }
                out.push(Term {
                    label: label.to_string(),
                    coef: coef.to_string(),
                });
            }
            _ => return Err(perr(line, format!("expected `<label> <coef>`, got `{}`", chunk.trim()))),
        }
    }
    if out.is_empty() {
        return Err(perr(line, "empty combination"));
    }
    Ok(out)
}

fn parse_usize(line: usize, s: &str) -> Result<usize, AppendixError> {
    s.trim().parse().map_err(|_| perr(line, format!("expected a count, got `{}`", s.trim())))
}

/// Normalizes a whitespace-separated rational vector.
fn parse_weight(line: usize, s: &str) -> Result<String, AppendixError> {
    let mut v = Vec::new();
    for tok in s.split_whitespace() {
        let r = parse_rat(tok).ok_or_else(|| perr(line, format!("bad weight entry `{tok}`")))?;
        v.push(crate::linalg::fmt_rat(&r));
    }
    if v.is_empty() {
        return Err(perr(line, "empty weight"));
    }
    Ok(v.join(" "))
}

impl RigidCaseSpec {
    pub fn parse(text: &str) -> Result<Self, AppendixError> {
        let mut name = None;
        let mut ty: Option<CartanType> = None;
        let mut root_map = BTreeMap::new();
        let mut e = Vec::new();
        let mut t = None;
        let mut t1 = Vec::new();
        let mut expect = Expectations::default();
        for (k, raw) in text.lines().enumerate() {
            let ln = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(':').ok_or_else(|| perr(ln, "missing `:`"))?;
            let rest = rest.trim();
            match key.trim() {
                "name" => name = Some(rest.to_string()),
                "type" => ty = Some(rest.parse().map_err(|e| perr(ln, format!("{e}")))?),
                "map" => {
                    let (idx, coords) = rest.split_once('=').ok_or_else(|| perr(ln, "expected `k = coords`"))?;
                    let idx = parse_usize(ln, idx)?;
                    let coords = coords
                        .split_whitespace()
                        .map(|c| c.parse::<i64>().map_err(|_| perr(ln, format!("bad coordinate `{c}`"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    if root_map.insert(idx, coords).is_some() {
                        return Err(perr(ln, format!("root {idx} mapped twice")));
                    }
                }
                "e" => e.extend(parse_terms(ln, rest)?),
                "t" => t = Some(parse_terms(ln, rest)?),
                "t1" => t1.push(parse_terms(ln, rest)?),
                "expect" => parse_expect(ln, rest, &mut expect)?,
                other => return Err(perr(ln, format!("unknown key `{other}`"))),
            }
        }
        let cartan_type = ty.ok_or_else(|| perr(0, "missing `type:`"))?;
        for (k, c) in &root_map {
            if c.len() != cartan_type.rank() {
                return Err(AppendixError::NotARoot { index: *k });
            }
        }
        if e.is_empty() {
            return Err(perr(0, "missing `e:`"));
        }
        let t = t.ok_or_else(|| perr(0, "missing `t:`"))?;
        if t1.is_empty() {
            return Err(perr(0, "missing `t1:`"));
        }
        Ok(RigidCaseSpec {
            name: name.unwrap_or_else(|| cartan_type.to_string()),
            cartan_type,
            root_map,
            e,
            t,
            t1,
            expect,
        })
    }

    /// Coordinates in the Chevalley basis of `l`.
    pub fn resolve(&self, l: &LieAlgebraTable, terms: &[Term]) -> Result<Vec<Rat>, AppendixError> {
        let rd = l.root_data().ok_or(AppendixError::NoRootData)?;
        let mut v = vec![Rat::zero(); l.dim()];
        for term in terms {
            let coef = parse_rat(&term.coef).expect("validated at parse time");
            let i = self.basis_index(rd, &term.label)?;
            v[i] += coef;
        }
        Ok(v)
    }

    fn basis_index(&self, rd: &crate::algebra::RootData, label: &str) -> Result<usize, AppendixError> {
        let unknown = || AppendixError::UnknownLabel(label.to_string());
        let (head, num) = label.split_at(1.min(label.len()));
        let k: usize = num.parse().map_err(|_| unknown())?;
        match head {
            "h" if (1..=rd.rank()).contains(&k) => Ok(rd.cartan[k - 1]),
            "x" | "y" => {
                let coords = self.root_map.get(&k).ok_or_else(unknown)?;
                let idx = rd
                    .root_system
                    .positive_index(coords)
                    .ok_or(AppendixError::NotARoot { index: k })?;
                let r = if head == "x" { Root::pos(idx) } else { Root::neg(idx) };
                Ok(rd.basis_index(r))
            }
            _ => Err(unknown()),
        }
    }
}

fn parse_expect(ln: usize, rest: &str, ex: &mut Expectations) -> Result<(), AppendixError> {
    let (lhs, rhs) = rest.split_once('=').ok_or_else(|| perr(ln, "expected `key = value`"))?;
    let mut toks = lhs.split_whitespace();
    let key = toks.next().ok_or_else(|| perr(ln, "empty expectation"))?;
    let arg: Vec<&str> = toks.collect();
    let scalar = |arg: &[&str]| {
        if arg.is_empty() {
            Ok(())
        } else {
            Err(perr(ln, format!("`{key}` takes no argument")))
        }
    };
    match key {
        "dim_ge" => {
            scalar(&arg)?;
            ex.dim_ge = Some(parse_usize(ln, rhs)?);
        }
        "dim_z" => {
            scalar(&arg)?;
            ex.dim_z = Some(parse_usize(ln, rhs)?);
        }
        "dim_le" => {
            scalar(&arg)?;
            ex.dim_le = Some(parse_usize(ln, rhs)?);
        }
        "index" => {
            scalar(&arg)?;
            ex.index = Some(parse_usize(ln, rhs)?);
        }
        "condition" => {
            scalar(&arg)?;
            match rhs.trim() {
                "1" => ex.condition = Some(1),
                "2" => ex.condition = Some(2),
                other => return Err(perr(ln, format!("condition must be 1 or 2, got `{other}`"))),
            }
        }
        "t_mult" => {
            ex.t_mult.insert(parse_weight(ln, &arg.join(" "))?, parse_usize(ln, rhs)?);
        }
        "weight" => {
            ex.weight_mult.insert(parse_weight(ln, &arg.join(" "))?, parse_usize(ln, rhs)?);
        }
        "singular_block" => {
            scalar(&arg)?;
            ex.singular_block = Some(parse_weight(ln, rhs)?);
        }
        "singular_order" => {
            scalar(&arg)?;
            ex.singular_order = Some(parse_usize(ln, rhs)?);
        }
        "singular_rank" => {
            scalar(&arg)?;
            ex.singular_rank = Some(parse_usize(ln, rhs)?);
        }
        other => return Err(perr(ln, format!("unknown expectation `{other}`"))),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "
type: A2
map: 3 = 1 1
e: x3 1
t: h1 1, h2 -1   # comment
t1: h1 1, h2 -1
expect: dim_ge = 4
expect: t_mult -1 = 1
expect: weight 1/2 = 2
";

    #[test]
    fn parses_small_case() {
        let s = RigidCaseSpec::parse(SMALL).unwrap();
        assert_eq!(s.name, "A2");
        assert_eq!(s.root_map[&3], vec![1, 1]);
        assert_eq!(s.t.len(), 2);
        assert_eq!(s.expect.dim_ge, Some(4));
        assert_eq!(s.expect.t_mult["-1"], 1);
        assert_eq!(s.expect.weight_mult["1/2"], 2);
    }

    #[test]
    fn resolves_labels() {
        let s = RigidCaseSpec::parse(SMALL).unwrap();
        let l = crate::algebra::chevalley_algebra(s.cartan_type);
        let v = s.resolve(&l, &s.e).unwrap();
        assert_eq!(l.format_vec(&v), "x3");
        let bad = vec![Term {
            label: "x9".into(),
            coef: "1".into(),
        }];
        assert!(matches!(s.resolve(&l, &bad), Err(AppendixError::UnknownLabel(_))));
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "type: A2\ne: x1\nt: h1 1\nt1: h1 1",
            "type: A2\nfoo: 1",
            "type: Q2",
            "type: A2\nmap: 1 = 1\ne: x1 1\nt: h1 1\nt1: h1 1",
            "type: A2\ne: h1 1\nt: h1 1\nt1: h1 1\nexpect: condition = 3",
            "type: A2\ne: h1 1\nt1: h1 1",
        ] {
            assert!(RigidCaseSpec::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn non_root_map_entry() {
        let s = RigidCaseSpec::parse("type: A2\nmap: 1 = 2 1\ne: x1 1\nt: h1 1\nt1: h1 1").unwrap();
        let l = crate::algebra::chevalley_algebra(s.cartan_type);
        assert!(matches!(s.resolve(&l, &s.e), Err(AppendixError::NotARoot { index: 1 })));
    }
}
