//! Symbolic wedge-of-spheres expressions: spheres (dimension >= -1),
//! wedges, suspension powers, the contractible space, and opaque leaves
//! standing for independence complexes of path/cycle powers that have not
//! been expanded yet.
//!
//! Normal form: suspensions pushed onto spheres, wedges flattened with
//! contractible summands absorbed, and the sphere multiset sorted. The
//! (-1)-sphere (the empty complex) is the join unit, not a wedge summand:
//! a wedge combining it with anything else has no normal form here and is
//! rejected.

use crate::homology::HomologySignature;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomotopyError {
    #[error("expression contains an unexpanded leaf {0}")]
    UnresolvedOpaque(String),
    #[error("no normal form: S^-1 cannot be wedged with other summands")]
    NonNormalizable,
    #[error("parse error at byte {at}: {msg}")]
    Parse { at: usize, msg: String },
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PowerFamily {
    PathPower,
    CyclePower,
}

impl PowerFamily {
    pub fn letter(self) -> char {
        match self {
            PowerFamily::PathPower => 'P',
            PowerFamily::CyclePower => 'C',
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum HomotopyExpr {
    Contractible,
    /// `Sphere(-1)` is the empty complex.
    Sphere(i32),
    Wedge(Vec<HomotopyExpr>),
    Susp(u32, Box<HomotopyExpr>),
    /// Unexpanded `Ind(P_n^r)` or `Ind(C_n^r)`.
    Opaque {
        family: PowerFamily,
        n: i64,
        r: u32,
    },
}

impl HomotopyExpr {
    pub fn wedge(items: Vec<HomotopyExpr>) -> HomotopyExpr {
        match items.len() {
            0 => HomotopyExpr::Contractible,
            1 => items.into_iter().next().unwrap(),
            _ => HomotopyExpr::Wedge(items),
        }
    }

    pub fn susp(k: u32, inner: HomotopyExpr) -> HomotopyExpr {
        if k == 0 {
            inner
        } else {
            HomotopyExpr::Susp(k, Box::new(inner))
        }
    }

    /// Wedge of `k` copies; the empty wedge is contractible.
    pub fn wedge_pow(&self, k: u64) -> HomotopyExpr {
        HomotopyExpr::wedge((0..k).map(|_| self.clone()).collect())
    }

    pub fn contains_opaque(&self) -> bool {
        match self {
            HomotopyExpr::Opaque { .. } => true,
            HomotopyExpr::Wedge(items) => items.iter().any(|e| e.contains_opaque()),
            HomotopyExpr::Susp(_, inner) => inner.contains_opaque(),
            _ => false,
        }
    }

    /// Normal form; idempotent. Fails on opaque leaves and on wedges that
    /// combine the empty complex with anything else.
    pub fn normalize(&self) -> Result<HomotopyExpr, HomotopyError> {
        let mut spheres: Vec<i32> = Vec::new();
        self.collect_spheres(0, &mut spheres)?;
        spheres.sort_unstable();
        if spheres.len() > 1 && spheres[0] == -1 {
            return Err(HomotopyError::NonNormalizable);
        }
        Ok(HomotopyExpr::wedge(
            spheres.into_iter().map(HomotopyExpr::Sphere).collect(),
        ))
    }

    fn collect_spheres(&self, susp: u32, out: &mut Vec<i32>) -> Result<(), HomotopyError> {
        match self {
            HomotopyExpr::Contractible => Ok(()),
            HomotopyExpr::Sphere(d) => {
                out.push(d + susp as i32);
                Ok(())
            }
            HomotopyExpr::Wedge(items) => {
                for e in items {
                    e.collect_spheres(susp, out)?;
                }
                Ok(())
            }
            HomotopyExpr::Susp(k, inner) => inner.collect_spheres(susp + k, out),
            HomotopyExpr::Opaque { .. } => Err(HomotopyError::UnresolvedOpaque(self.render())),
        }
    }

    /// Reduced homology of the expression: sphere multiplicities, no torsion.
    pub fn to_signature(&self) -> Result<HomologySignature, HomotopyError> {
        let mut spheres: Vec<i32> = Vec::new();
        self.collect_spheres(0, &mut spheres)?;
        let mut sig = HomologySignature::zero();
        for d in spheres {
            *sig.betti.entry(d).or_insert(0) += 1;
        }
        Ok(sig)
    }

    /// Lifts a torsion-free signature to the corresponding sphere wedge.
    pub fn from_signature(sig: &HomologySignature) -> Option<HomotopyExpr> {
        if !sig.is_torsion_free() || sig.is_void {
            return None;
        }
        let mut items = Vec::new();
        for (&d, &b) in &sig.betti {
            for _ in 0..b {
                items.push(HomotopyExpr::Sphere(d));
            }
        }
        if items.len() > 1 && items[0] == HomotopyExpr::Sphere(-1) {
            return None;
        }
        Some(HomotopyExpr::wedge(items))
    }

    /// Canonical text form; see [`parse`] for the accepted grammar.
    pub fn render(&self) -> String {
        match self {
            HomotopyExpr::Contractible => "*".into(),
            HomotopyExpr::Sphere(d) => format!("S^{d}"),
            HomotopyExpr::Susp(k, inner) => format!("Susp^{k}({})", inner.render()),
            HomotopyExpr::Opaque { family, n, r } => {
                format!("Ind({}_{}^{})", family.letter(), n, r)
            }
            HomotopyExpr::Wedge(items) => {
                // group equal adjacent summands as `k x expr`
                let mut parts: Vec<String> = Vec::new();
                let mut i = 0;
                while i < items.len() {
                    let mut j = i + 1;
                    while j < items.len() && items[j] == items[i] {
                        j += 1;
                    }
                    let run = j - i;
                    let body = items[i].render();
                    if run > 1 {
                        parts.push(format!("{run} x {body}"));
                    } else {
                        parts.push(body);
                    }
                    i = j;
                }
                format!("Wedge[{}]", parts.join(", "))
            }
        }
    }
}

impl fmt::Display for HomotopyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Parses the rendered form back. Grammar (whitespace-insensitive):
///
/// ```text
/// expr  := term ( "v" term )*
/// term  := [ count "x" ] atom
/// atom  := "*" | "S^" int | "Susp^" count "(" expr ")"
///        | "Ind(" ("P"|"C") "_" int "^" count ")"
///        | "Wedge[" [ term ("," term)* ] "]" | "(" expr ")"
/// ```
///
/// A multi-term `expr` and a `Wedge[..]` both denote wedge sums, so both
/// `S^3 v S^3` and `Wedge[2 x S^3]` parse.
pub fn parse(input: &str) -> Result<HomotopyExpr, HomotopyError> {
    let mut p = Parser {
        bytes: input.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> HomotopyError {
        HomotopyError::Parse {
            at: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.bytes[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), HomotopyError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{tok}`")))
        }
    }

    fn int(&mut self) -> Result<i64, HomotopyError> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("expected an integer"))
    }

    fn expr(&mut self) -> Result<HomotopyExpr, HomotopyError> {
        let mut items = Vec::new();
        self.term_into(&mut items)?;
        loop {
            self.skip_ws();
            if self.bytes.get(self.pos) == Some(&b'v') {
                self.pos += 1;
                self.term_into(&mut items)?;
            } else {
                break;
            }
        }
        if items.len() == 1 {
            Ok(items.pop().unwrap())
        } else {
            Ok(HomotopyExpr::Wedge(items))
        }
    }

    /// One term; the `count x atom` sugar expands to `count` copies inline.
    fn term_into(&mut self, items: &mut Vec<HomotopyExpr>) -> Result<(), HomotopyError> {
        self.skip_ws();
        let save = self.pos;
        if self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            let count = self.int()?;
            self.skip_ws();
            if self.bytes.get(self.pos) == Some(&b'x') {
                self.pos += 1;
                let atom = self.atom()?;
                if count < 0 {
                    return Err(self.err("negative multiplicity"));
                }
                items.extend((0..count).map(|_| atom.clone()));
                return Ok(());
            }
            self.pos = save;
        }
        items.push(self.atom()?);
        Ok(())
    }

    fn atom(&mut self) -> Result<HomotopyExpr, HomotopyError> {
        match self.peek() {
            Some(b'*') => {
                self.pos += 1;
                Ok(HomotopyExpr::Contractible)
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            Some(b'S') if self.eat("Susp^") => {
                let k = self.int()?;
                if k < 0 {
                    return Err(self.err("negative suspension power"));
                }
                self.expect("(")?;
                let inner = self.expr()?;
                self.expect(")")?;
                Ok(HomotopyExpr::susp(k as u32, inner))
            }
            Some(b'S') if self.eat("S^") => Ok(HomotopyExpr::Sphere(self.int()? as i32)),
            Some(b'W') if self.eat("Wedge[") => {
                let mut items = Vec::new();
                if !self.eat("]") {
                    loop {
                        self.term_into(&mut items)?;
                        if self.eat("]") {
                            break;
                        }
                        self.expect(",")?;
                    }
                }
                // kept literal (no smart constructor) so parse inverts render
                Ok(HomotopyExpr::Wedge(items))
            }
            Some(b'I') if self.eat("Ind(") => {
                let family = match self.peek() {
                    Some(b'P') => PowerFamily::PathPower,
                    Some(b'C') => PowerFamily::CyclePower,
                    _ => return Err(self.err("expected `P` or `C`")),
                };
                self.pos += 1;
                self.expect("_")?;
                let n = self.int()?;
                self.expect("^")?;
                let r = self.int()?;
                self.expect(")")?;
                if r < 1 {
                    return Err(self.err("power must be at least 1"));
                }
                Ok(HomotopyExpr::Opaque {
                    family,
                    n,
                    r: r as u32,
                })
            }
            _ => Err(self.err("expected an expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use HomotopyExpr::*;

    fn sphere(d: i32) -> HomotopyExpr {
        Sphere(d)
    }

    #[test]
    fn normalization() {
        let e = HomotopyExpr::susp(2, Wedge(vec![sphere(0), sphere(0)]));
        assert_eq!(e.normalize().unwrap(), Wedge(vec![sphere(2), sphere(2)]));

        let e = Wedge(vec![Contractible, sphere(1)]);
        assert_eq!(e.normalize().unwrap(), sphere(1));

        assert_eq!(
            HomotopyExpr::susp(1, sphere(-1)).normalize().unwrap(),
            sphere(0)
        );
        assert_eq!(Contractible.normalize().unwrap(), Contractible);

        // suspension of a contractible space stays contractible
        assert_eq!(
            HomotopyExpr::susp(3, Contractible).normalize().unwrap(),
            Contractible
        );

        assert_eq!(
            Wedge(vec![sphere(-1), sphere(2)]).normalize(),
            Err(HomotopyError::NonNormalizable)
        );
        let opaque = Opaque {
            family: PowerFamily::PathPower,
            n: 5,
            r: 2,
        };
        assert!(matches!(
            opaque.normalize(),
            Err(HomotopyError::UnresolvedOpaque(_))
        ));
    }

    #[test]
    fn signatures() {
        use crate::homology::HomologySignature as Sig;
        assert_eq!(
            Wedge(vec![sphere(1), sphere(1)]).to_signature().unwrap(),
            Sig::from_betti(&[(1, 2)])
        );
        assert_eq!(Contractible.to_signature().unwrap(), Sig::zero());
        assert_eq!(
            sphere(-1).to_signature().unwrap(),
            Sig::from_betti(&[(-1, 1)])
        );
        // lift round-trip
        let sig = Sig::from_betti(&[(1, 2), (3, 1)]);
        let e = HomotopyExpr::from_signature(&sig).unwrap();
        assert_eq!(e.to_signature().unwrap(), sig);
    }

    #[test]
    fn wedge_powers() {
        assert_eq!(
            sphere(1).wedge_pow(3),
            Wedge(vec![sphere(1), sphere(1), sphere(1)])
        );
        assert_eq!(sphere(1).wedge_pow(0), Contractible);
        assert_eq!(
            Wedge(vec![sphere(0), sphere(0)])
                .wedge_pow(2)
                .normalize()
                .unwrap(),
            Wedge(vec![sphere(0); 4])
        );
        assert_eq!(sphere(5).wedge_pow(1), sphere(5));
    }

    #[test]
    fn render_and_parse() {
        let cases: Vec<(HomotopyExpr, &str)> = vec![
            (sphere(3), "S^3"),
            (sphere(-1), "S^-1"),
            (Contractible, "*"),
            (Wedge(vec![sphere(1); 3]), "Wedge[3 x S^1]"),
            (
                Wedge(vec![sphere(1), sphere(3), sphere(3)]),
                "Wedge[S^1, 2 x S^3]",
            ),
            (
                HomotopyExpr::susp(
                    2,
                    Opaque {
                        family: PowerFamily::CyclePower,
                        n: 14,
                        r: 2,
                    },
                ),
                "Susp^2(Ind(C_14^2))",
            ),
        ];
        for (e, s) in cases {
            assert_eq!(e.render(), s);
            assert_eq!(parse(s).unwrap(), e, "parse({s})");
        }

        // spec-shaped sugar forms
        assert_eq!(
            parse("S^3 v S^3").unwrap(),
            Wedge(vec![sphere(3), sphere(3)])
        );
        let partial =
            parse("Susp^2(Ind(C_14^2)) v 4 x Susp^3(Ind(P_9^2)) v 5 x Susp^3(Ind(P_8^2))").unwrap();
        match &partial {
            Wedge(items) => assert_eq!(items.len(), 10), // multiplicities expand inline
            _ => panic!("expected wedge"),
        }
        // the canonical renderer regroups equal runs, so the round trip
        // reproduces the multiset
        assert_eq!(parse(&partial.render()).unwrap(), partial);
        assert_eq!(
            parse("Ind(P_-1^2)").unwrap(),
            Opaque {
                family: PowerFamily::PathPower,
                n: -1,
                r: 2
            }
        );

        assert!(parse("S^").is_err());
        assert!(parse("Wedge[S^1").is_err());
        assert!(parse("S^1 extra").is_err());
    }

    #[test]
    fn parse_render_roundtrip_structural() {
        let exprs = vec![
            Wedge(vec![
                Wedge(vec![sphere(0), sphere(1)]),
                sphere(2),
                HomotopyExpr::susp(1, Wedge(vec![sphere(0), Contractible])),
            ]),
            HomotopyExpr::susp(4, sphere(-1)),
            Wedge(vec![sphere(2), sphere(2), sphere(2), sphere(5)]),
        ];
        for e in exprs {
            assert_eq!(parse(&e.render()).unwrap(), e, "{}", e.render());
        }
    }
}
