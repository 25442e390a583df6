//! Text shorthands for algebras, groups and elements.
//!
//! ```text
//! algebra ::= "chain:" N | "interval" | "chang" | "delta:" group | "bool:" K
//!           | "prod:" item ("," item)+ | "glue:" item "," item | json
//! item    ::= algebra | "(" algebra ")"
//! group   ::= "Z" | "Q" | "Z[1/p,1/q,...]" | "trivial" | "lex:" group
//!           | "chi:" p "^" e ("," p "^" e)* ["," "default=inf"] | json
//! element ::= rational | "(" element "," element ")" | "[" element ("," element)* "]"
//! ```
//!
//! Items containing commas must be parenthesised inside `prod:` and `glue:`.

use std::collections::BTreeMap;

use crate::algebra::lgroup::{GroupElem, LGroup};
use crate::algebra::mv::{MvAlgebra, MvValue};
use crate::error::{Error, Result};
use crate::functors::{delta, glue::glue_boolean_perfect};
use crate::qpoints::{Characteristic, DefaultExponent, Exponent};
use crate::rational::Rational;

fn bad(text: &str, what: &str) -> Error {
    Error::Parse {
        position: 0,
        message: format!("cannot read {text:?} as {what}"),
    }
}

/// Splits at commas outside `()` and `[]`.
pub fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

/// Removes one pair of enclosing parentheses when they match each other.
fn unwrap_parens(text: &str) -> &str {
    let t = text.trim();
    if t.starts_with('(') && t.ends_with(')') {
        let inner = &t[1..t.len() - 1];
        let mut depth = 0i32;
        for c in inner.chars() {
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                _ => {}
            }
            if depth < 0 {
                return t;
            }
        }
        if depth == 0 {
            return inner.trim();
        }
    }
    t
}

fn from_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        position: e.column().saturating_sub(1),
        message: format!("invalid {what} JSON: {e}"),
    })
}

pub fn parse_algebra(text: &str) -> Result<MvAlgebra> {
    let t = unwrap_parens(text);
    if t.starts_with('{') {
        let a: MvAlgebra = from_json(t, "algebra")?;
        a.validate()?;
        return Ok(a);
    }
    let (head, rest) = t.split_once(':').unwrap_or((t, ""));
    match (head, rest) {
        ("interval", "") => Ok(MvAlgebra::RationalInterval),
        ("chang", "") => Ok(MvAlgebra::Chang),
        ("chain", n) => MvAlgebra::chain(n.parse().map_err(|_| bad(t, "a chain size"))?),
        ("bool", k) => {
            let k: usize = k.parse().map_err(|_| bad(t, "a Boolean rank"))?;
            if k == 0 {
                return Err(Error::Domain("bool:0 is degenerate".into()));
            }
            MvAlgebra::boolean(k)
        }
        ("delta", g) => Ok(delta(&parse_group(g)?)),
        ("prod", items) => {
            let factors = split_top_level(items)
                .into_iter()
                .map(parse_algebra)
                .collect::<Result<Vec<_>>>()?;
            if factors.len() < 2 {
                return Err(bad(t, "a product of at least two factors"));
            }
            MvAlgebra::product(factors)
        }
        ("glue", items) => match split_top_level(items).as_slice() {
            [b, p] => glue_boolean_perfect(&parse_algebra(b)?, &parse_algebra(p)?),
            _ => Err(bad(t, "glue:BOOLEAN,PERFECT")),
        },
        _ => Err(bad(t, "an algebra (chain:N, interval, chang, delta:G, bool:K, prod:A,B, glue:B,P)")),
    }
}

pub fn parse_group(text: &str) -> Result<LGroup> {
    let t = unwrap_parens(text);
    if t.starts_with('{') {
        return from_json(t, "group");
    }
    match t {
        "Z" => return Ok(LGroup::Integers),
        "trivial" => return Ok(LGroup::TrivialGroup),
        _ => {}
    }
    if let Some(inner) = t.strip_prefix("lex:") {
        return Ok(LGroup::lex(parse_group(inner)?));
    }
    Ok(LGroup::q_subgroup(parse_characteristic(t)?))
}

/// `Q`, `Z`, `Z[1/2,1/3]`, `chi:3^2,5^inf[,default=inf]` or characteristic JSON.
pub fn parse_characteristic(text: &str) -> Result<Characteristic> {
    let t = text.trim();
    if t.starts_with('{') {
        return from_json(t, "characteristic");
    }
    match t {
        "Z" => return Ok(Characteristic::integers()),
        "Q" => return Ok(Characteristic::rationals()),
        _ => {}
    }
    if let Some(inner) = t.strip_prefix("Z[").and_then(|s| s.strip_suffix(']')) {
        let primes = inner
            .split(',')
            .map(|s| {
                s.trim()
                    .strip_prefix("1/")
                    .and_then(|p| p.parse().ok())
                    .ok_or_else(|| bad(t, "Z[1/p,...]"))
            })
            .collect::<Result<Vec<u64>>>()?;
        return Characteristic::localization(&primes);
    }
    if let Some(inner) = t.strip_prefix("chi:") {
        let mut default = DefaultExponent::Zero;
        let mut entries = Vec::new();
        for part in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match part.strip_prefix("default=") {
                Some("inf") => default = DefaultExponent::Infinite,
                Some("0") => default = DefaultExponent::Zero,
                Some(_) => return Err(bad(part, "default=0 or default=inf")),
                None => {
                    let (p, e) = part.split_once('^').ok_or_else(|| bad(part, "p^e"))?;
                    let p: u64 = p.trim().parse().map_err(|_| bad(part, "p^e"))?;
                    let e: Exponent = e.parse()?;
                    entries.push((p, e));
                }
            }
        }
        return Characteristic::new(default, entries);
    }
    Err(bad(t, "a group (Z, Q, Z[1/p,...], trivial, lex:G, chi:p^e,...)"))
}

#[derive(Debug)]
enum Tree<'a> {
    Atom(&'a str),
    Pair(Vec<Tree<'a>>),
    List(Vec<Tree<'a>>),
}

fn tree(text: &str) -> Result<Tree<'_>> {
    let t = text.trim();
    let inner = |open: char, close: char| {
        t.strip_prefix(open)
            .and_then(|s| s.strip_suffix(close))
            .filter(|s| split_top_level(s).len() >= 2 || open == '[')
    };
    if let Some(s) = inner('(', ')') {
        return Ok(Tree::Pair(split_top_level(s).into_iter().map(tree).collect::<Result<_>>()?));
    }
    if let Some(s) = inner('[', ']') {
        return Ok(Tree::List(split_top_level(s).into_iter().map(tree).collect::<Result<_>>()?));
    }
    if t.is_empty() || t.contains(['(', ')', '[', ']', ',']) {
        return Err(bad(t, "an element"));
    }
    Ok(Tree::Atom(t))
}

fn group_elem(g: &LGroup, t: &Tree) -> Result<GroupElem> {
    let x = match (g, t) {
        (LGroup::LexZG { group }, Tree::Pair(items)) if items.len() == 2 => {
            let a = match &items[0] {
                Tree::Atom(s) => s.parse().map_err(|_| bad(s, "an integer"))?,
                _ => return Err(bad("pair", "an integer coordinate")),
            };
            GroupElem::Lex(a, Box::new(group_elem(group, &items[1])?))
        }
        (LGroup::LexZG { .. }, _) => return Err(bad("element", "a pair (a,g)")),
        (_, Tree::Atom(s)) => GroupElem::Scalar(s.parse::<Rational>()?),
        _ => return Err(bad("element", "a rational")),
    };
    if !g.contains(&x) {
        return Err(Error::Structural(format!("{x} is not in {g}")));
    }
    Ok(x)
}

fn element_from_tree(alg: &MvAlgebra, t: &Tree) -> Result<MvValue> {
    let x = match (alg, t) {
        (MvAlgebra::FiniteChain { .. } | MvAlgebra::RationalInterval, Tree::Atom(s)) => {
            MvValue::Scalar(s.parse::<Rational>()?)
        }
        (MvAlgebra::Chang | MvAlgebra::DeltaOfGroup { .. }, Tree::Pair(items)) if items.len() == 2 => {
            let top = match items[0] {
                Tree::Atom("0") => false,
                Tree::Atom("1") => true,
                _ => return Err(bad("element", "a pair whose first coordinate is 0 or 1")),
            };
            MvValue::Lex {
                top,
                offset: group_elem(alg.lex_group().unwrap(), &items[1])?,
            }
        }
        (MvAlgebra::Product { factors }, Tree::List(items)) if items.len() == factors.len() => MvValue::Tuple(
            factors
                .iter()
                .zip(items)
                .map(|(a, i)| element_from_tree(a, i))
                .collect::<Result<_>>()?,
        ),
        (MvAlgebra::Glued { boolean, perfect }, Tree::List(items)) if items.len() == 2 => MvValue::Tuple(vec![
            element_from_tree(boolean, &items[0])?,
            element_from_tree(perfect, &items[1])?,
        ]),
        _ => return Err(bad("element", &format!("an element of {alg}"))),
    };
    alg.require(&x)?;
    Ok(x)
}

/// Reads an element in its display form: `1/2`, `(1,-3)`, `[1,(0,2)]`.
pub fn parse_element(alg: &MvAlgebra, text: &str) -> Result<MvValue> {
    element_from_tree(alg, &tree(text)?)
}

/// Reads a group element: `3/4` in scalar groups, `(1,-2)` in `Z ×lex G`.
pub fn parse_group_element(g: &LGroup, text: &str) -> Result<GroupElem> {
    group_elem(g, &tree(text)?)
}

/// Reads `x=1/2,y=(0,3)`.
pub fn parse_assignments(alg: &MvAlgebra, text: &str) -> Result<BTreeMap<String, MvValue>> {
    let mut out = BTreeMap::new();
    for part in split_top_level(text).into_iter().map(str::trim).filter(|s| !s.is_empty()) {
        let (name, value) = part.split_once('=').ok_or_else(|| bad(part, "name=value"))?;
        let name = name.trim();
        if out.insert(name.to_string(), parse_element(alg, value)?).is_some() {
            return Err(bad(part, "a variable assigned once"));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_shorthands() {
        assert_eq!(parse_algebra("chain:3").unwrap(), MvAlgebra::FiniteChain { n: 3 });
        assert_eq!(parse_algebra("chang").unwrap(), MvAlgebra::Chang);
        assert_eq!(parse_algebra("delta:Z").unwrap(), MvAlgebra::Chang);
        assert_eq!(parse_algebra("bool:2").unwrap(), parse_algebra("prod:chain:2,chain:2").unwrap());
        let nested = parse_algebra("prod:(prod:chain:2,chain:3),(delta:Z[1/2,1/3])").unwrap();
        assert_eq!(parse_algebra(&nested.shorthand()).unwrap(), nested);
        let g = parse_algebra("glue:bool:2,chang").unwrap();
        assert_eq!(parse_algebra(&g.shorthand()).unwrap(), g);
        let json = serde_json::to_string(&MvAlgebra::Chang).unwrap();
        assert_eq!(parse_algebra(&json).unwrap(), MvAlgebra::Chang);
        for bad in ["chain:1", "chain:x", "prod:chain:2", "glue:chain:3,chang", "ring", "bool:0"] {
            assert!(parse_algebra(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn group_shorthands() {
        assert_eq!(parse_group("Z").unwrap(), LGroup::Integers);
        assert_eq!(parse_group("Q").unwrap(), LGroup::q_subgroup(Characteristic::rationals()));
        let six = parse_group("Z[1/2,1/3]").unwrap();
        assert_eq!(six, LGroup::q_subgroup(Characteristic::localization(&[2, 3]).unwrap()));
        let chi = parse_characteristic("chi:3^2").unwrap();
        assert_eq!(chi.exponent(3), Exponent::Finite(2));
        let almost_q = parse_characteristic("chi:2^0,default=inf").unwrap();
        assert_eq!(almost_q.exponent(2), Exponent::Finite(0));
        assert!(almost_q.exponent(5).is_infinite());
        for g in ["Z", "Q", "Z[1/2]", "chi:3^2", "chi:2^0,default=inf", "trivial", "lex:Q"] {
            let parsed = parse_group(g).unwrap();
            assert_eq!(parse_group(&parsed.shorthand()).unwrap(), parsed, "{g}");
        }
        assert!(parse_group("Z[1/4]").is_err());
        assert!(parse_group("R").is_err());
    }

    #[test]
    fn elements_round_trip_through_display() {
        for alg in ["chain:5", "interval", "chang", "delta:Q", "bool:3", "glue:bool:2,chang", "delta:lex:Z"] {
            let a = parse_algebra(alg).unwrap();
            for x in a.enumerate(3) {
                assert_eq!(parse_element(&a, &x.to_string()).unwrap(), x, "{alg}");
            }
        }
        let chang = MvAlgebra::Chang;
        assert_eq!(parse_element(&chang, "(1,-3)").unwrap(), MvValue::chang(1, -3));
        assert!(parse_element(&chang, "(1,3)").is_err());
        assert!(parse_element(&MvAlgebra::FiniteChain { n: 3 }, "1/3").is_err());
    }

    #[test]
    fn assignments() {
        let m = parse_assignments(&MvAlgebra::Chang, "x=(0,2), y=(1,-1)").unwrap();
        assert_eq!(m["x"], MvValue::chang(0, 2));
        assert_eq!(m["y"], MvValue::chang(1, -1));
        assert!(parse_assignments(&MvAlgebra::Chang, "x=(0,2),x=(0,1)").is_err());
    }

    #[test]
    fn group_elements() {
        let lex = LGroup::lex(LGroup::Integers);
        assert_eq!(parse_group_element(&lex, "(1,-2)").unwrap(), GroupElem::lex(1, GroupElem::int(-2)));
        assert_eq!(parse_group_element(&LGroup::Integers, "7").unwrap(), GroupElem::int(7));
        assert!(parse_group_element(&LGroup::Integers, "1/2").is_err());
    }
}
