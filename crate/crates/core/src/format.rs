//! Plain-text descriptors for semigroups, acts, morphisms, pairings, Rees
//! sandwich matrices and pairs.
//!
//! Every file starts with a header line naming its kind and dimensions,
//! followed by rows of whitespace-separated 0-based indices. Blank lines and
//! lines starting with `#` are ignored. Parsing is strict: wrong row counts,
//! wrong row lengths, out-of-range entries and trailing content are errors
//! carrying the 1-based line number.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::acts::{Biact, LeftAct, RightAct};
use crate::{Error, FiniteSemigroup, Result};

struct Lines<'a> {
    lines: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines: Vec<_> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .map(|(i, l)| (i, l.split_whitespace().collect()))
            .collect();
        let last_line = text.lines().count().max(1);
        Self {
            lines,
            pos: 0,
            last_line,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        let line = self.lines.get(self.pos).cloned().ok_or_else(|| Error::Parse {
            line: self.last_line,
            message: format!("unexpected end of input, expected {what}"),
        })?;
        self.pos += 1;
        Ok(line)
    }

    fn finish(&self) -> Result<()> {
        match self.lines.get(self.pos) {
            None => Ok(()),
            Some((line, _)) => Err(Error::Parse {
                line: *line,
                message: "unexpected trailing content".into(),
            }),
        }
    }

    /// A header `keyword n1 n2 ...` with `arity` numbers.
    fn header(&mut self, keyword: &str, arity: usize) -> Result<(usize, Vec<usize>)> {
        let (line, tokens) = self.next(&format!("`{keyword}` header"))?;
        if tokens.first() != Some(&keyword) {
            return Err(Error::Parse {
                line,
                message: format!("expected header `{keyword}`"),
            });
        }
        if tokens.len() != arity + 1 {
            return Err(Error::Parse {
                line,
                message: format!("`{keyword}` header takes {arity} number(s)"),
            });
        }
        let nums = tokens[1..]
            .iter()
            .map(|t| number(line, t))
            .collect::<Result<Vec<_>>>()?;
        Ok((line, nums))
    }

    /// `rows` rows of exactly `cols` entries, each below `bound`.
    fn matrix(&mut self, rows: usize, cols: usize, bound: usize) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let (line, tokens) = self.next(&format!("row {} of {rows}", r + 1))?;
            if tokens.len() != cols {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {cols} entries, found {}", tokens.len()),
                });
            }
            for t in tokens {
                let v = number(line, t)?;
                if v >= bound {
                    return Err(Error::Parse {
                        line,
                        message: format!("entry {v} out of range 0..{bound}"),
                    });
                }
                out.push(v);
            }
        }
        Ok(out)
    }
}

fn number(line: usize, token: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("`{token}` is not a non-negative integer"),
    })
}

fn write_rows(out: &mut String, entries: &[usize], cols: usize) {
    for row in entries.chunks(cols.max(1)) {
        let cells: Vec<_> = row.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
}

/// `semigroup <n>` then `n` rows; row `x` lists `x·y` for every `y`.
pub fn parse_semigroup(text: &str) -> Result<FiniteSemigroup> {
    let mut lines = Lines::new(text);
    let (line, dims) = lines.header("semigroup", 1)?;
    let n = dims[0];
    if n == 0 {
        return Err(Error::Parse {
            line,
            message: "a semigroup needs at least one element".into(),
        });
    }
    let table = lines.matrix(n, n, n)?;
    lines.finish()?;
    FiniteSemigroup::new(n, table)
}

pub fn write_semigroup(s: &FiniteSemigroup) -> String {
    let mut out = format!("semigroup {}\n", s.order());
    write_rows(&mut out, s.table(), s.order());
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActKind {
    Left,
    Right,
    Bi,
}

/// The kind and carrier size declared by an act file's header.
pub fn act_header(text: &str) -> Result<(ActKind, usize)> {
    let mut lines = Lines::new(text);
    let (line, tokens) = lines.next("`act` header")?;
    if tokens.len() != 3 || tokens[0] != "act" {
        return Err(Error::Parse {
            line,
            message: "expected header `act <left|right|bi> <size>`".into(),
        });
    }
    let kind = match tokens[1] {
        "left" => ActKind::Left,
        "right" => ActKind::Right,
        "bi" => ActKind::Bi,
        other => {
            return Err(Error::Parse {
                line,
                message: format!("unknown act kind `{other}`"),
            })
        }
    };
    Ok((kind, number(line, tokens[2])?))
}

fn act_body<'a>(text: &'a str, expected: ActKind) -> Result<(Lines<'a>, usize)> {
    let (kind, size) = act_header(text)?;
    let mut lines = Lines::new(text);
    let (line, _) = lines.next("`act` header")?;
    if kind != expected {
        return Err(Error::Parse {
            line,
            message: format!("expected a {expected:?} act, found {kind:?}").to_lowercase(),
        });
    }
    Ok((lines, size))
}

/// `act right <size>` then `size` rows; row `a` lists `a·s` for every `s`.
pub fn parse_right_act(text: &str, s: Arc<FiniteSemigroup>) -> Result<RightAct> {
    let (mut lines, size) = act_body(text, ActKind::Right)?;
    let table = lines.matrix(size, s.order(), size)?;
    lines.finish()?;
    RightAct::new(s, size, &table)
}

/// `act left <size>` then `|S|` rows; row `s` lists `s·a` for every `a`.
pub fn parse_left_act(text: &str, s: Arc<FiniteSemigroup>) -> Result<LeftAct> {
    let (mut lines, size) = act_body(text, ActKind::Left)?;
    let table = lines.matrix(s.order(), size, size)?;
    lines.finish()?;
    LeftAct::new(s, size, &table)
}

/// `act bi <size>` then the left `S`-table followed by the right `T`-table.
pub fn parse_biact(text: &str, s: Arc<FiniteSemigroup>, t: Arc<FiniteSemigroup>) -> Result<Biact> {
    let (mut lines, size) = act_body(text, ActKind::Bi)?;
    let left = lines.matrix(s.order(), size, size)?;
    let right = lines.matrix(size, t.order(), size)?;
    lines.finish()?;
    Biact::new(LeftAct::new(s, size, &left)?, RightAct::new(t, size, &right)?)
}

pub fn write_right_act(act: &RightAct) -> String {
    let mut out = format!("act right {}\n", act.size());
    write_rows(&mut out, &act.table(), act.semigroup().order());
    out
}

pub fn write_left_act(act: &LeftAct) -> String {
    let mut out = format!("act left {}\n", act.size());
    write_rows(&mut out, &act.table(), act.size());
    out
}

pub fn write_biact(act: &Biact) -> String {
    let mut out = format!("act bi {}\n", act.size());
    write_rows(&mut out, &act.left().table(), act.size());
    write_rows(&mut out, &act.right().table(), act.right_semigroup().order());
    out
}

/// `morphism <n>` then `n` target indices, on one or more lines.
/// Returns the raw map; range checks against a target happen on use.
pub fn parse_morphism(text: &str) -> Result<Vec<usize>> {
    let mut lines = Lines::new(text);
    let (_, dims) = lines.header("morphism", 1)?;
    let n = dims[0];
    let mut map = Vec::with_capacity(n);
    while map.len() < n {
        let (line, tokens) = lines.next("morphism entries")?;
        if map.len() + tokens.len() > n {
            return Err(Error::Parse {
                line,
                message: format!("more than {n} entries"),
            });
        }
        for t in tokens {
            map.push(number(line, t)?);
        }
    }
    lines.finish()?;
    Ok(map)
}

pub fn write_morphism(map: &[usize]) -> String {
    let cells: Vec<_> = map.iter().map(|v| v.to_string()).collect();
    format!("morphism {}\n{}\n", map.len(), cells.join(" "))
}

/// `pairing <|P|> <|Q|>` then `|P|` rows of `|Q|` entries below
/// `bound`. Returns `(|P|, |Q|, table)`.
pub fn parse_pairing(text: &str, bound: usize) -> Result<(usize, usize, Vec<usize>)> {
    let mut lines = Lines::new(text);
    let (np, nq, table) = pairing_section(&mut lines, bound)?;
    lines.finish()?;
    Ok((np, nq, table))
}

fn pairing_section(lines: &mut Lines<'_>, bound: usize) -> Result<(usize, usize, Vec<usize>)> {
    let (_, dims) = lines.header("pairing", 2)?;
    let table = lines.matrix(dims[0], dims[1], bound)?;
    Ok((dims[0], dims[1], table))
}

pub fn write_pairing(np: usize, nq: usize, table: &[usize]) -> String {
    let mut out = format!("pairing {np} {nq}\n");
    write_rows(&mut out, table, nq);
    out
}

/// `rees <|U|> <|V|>` then `|V|` rows of `|U|` entries below `bound`; row
/// `v` lists `p(v, u)`. Returns `(|U|, |V|, sandwich)`.
pub fn parse_rees(text: &str, bound: usize) -> Result<(usize, usize, Vec<usize>)> {
    let mut lines = Lines::new(text);
    let (line, dims) = lines.header("rees", 2)?;
    let (u, v) = (dims[0], dims[1]);
    if u == 0 || v == 0 {
        return Err(Error::Parse {
            line,
            message: "index sets must be non-empty".into(),
        });
    }
    let table = lines.matrix(v, u, bound)?;
    lines.finish()?;
    Ok((u, v, table))
}

pub fn write_rees(u: usize, v: usize, sandwich: &[usize]) -> String {
    let mut out = format!("rees {u} {v}\n");
    write_rows(&mut out, sandwich, u);
    out
}

/// A pair descriptor: paths of the semigroup, the left act `A` and the
/// right act `B`, plus the pairing table `⟨a, b⟩`.
///
/// ```text
/// pair
/// semigroup z2.sgp
/// left regular-left.act
/// right regular-right.act
/// pairing 2 2
/// 0 1
/// 1 0
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDescriptor {
    pub semigroup: String,
    pub left: String,
    pub right: String,
    pub a_size: usize,
    pub b_size: usize,
    pub table: Vec<usize>,
}

/// Parses a pair descriptor; pairing entries are range-checked later
/// against the referenced semigroup.
pub fn parse_pair_descriptor(text: &str) -> Result<PairDescriptor> {
    let mut lines = Lines::new(text);
    lines.header("pair", 0)?;
    let mut path = |key: &str| -> Result<String> {
        let (line, tokens) = lines.next(&format!("`{key} <path>`"))?;
        if tokens.len() != 2 || tokens[0] != key {
            return Err(Error::Parse {
                line,
                message: format!("expected `{key} <path>`"),
            });
        }
        Ok(tokens[1].to_string())
    };
    let semigroup = path("semigroup")?;
    let left = path("left")?;
    let right = path("right")?;
    let (a_size, b_size, table) = pairing_section(&mut lines, usize::MAX)?;
    lines.finish()?;
    Ok(PairDescriptor {
        semigroup,
        left,
        right,
        a_size,
        b_size,
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::small;

    #[test]
    fn semigroup_round_trip() {
        for s in [small::right_zero(2), small::cyclic_group(3), small::null(2)] {
            assert_eq!(parse_semigroup(&write_semigroup(&s)).unwrap(), s);
        }
        let text = "# right zero\nsemigroup 2\n\n0 1\n0 1\n";
        assert_eq!(parse_semigroup(text).unwrap(), small::right_zero(2));
    }

    #[test]
    fn strict_semigroup_parsing() {
        assert_eq!(
            parse_semigroup("semigroup 2\n0 1\n0\n"),
            Err(Error::Parse {
                line: 3,
                message: "expected 2 entries, found 1".into()
            })
        );
        assert!(matches!(
            parse_semigroup("semigroup 2\n0 1\n0 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_semigroup("semigroup 2\n0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_semigroup("semigroup 1\n0\n0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_semigroup("group 1\n0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_semigroup("semigroup x\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_semigroup("semigroup 2\n1 0\n0 0\n"),
            Err(Error::AssociativityViolation { .. })
        ));
    }

    #[test]
    fn act_round_trips() {
        let s = Arc::new(small::semilattice_chain(3));
        let r = RightAct::regular(s.clone());
        assert_eq!(parse_right_act(&write_right_act(&r), s.clone()).unwrap(), r);
        let l = LeftAct::regular(s.clone());
        assert_eq!(parse_left_act(&write_left_act(&l), s.clone()).unwrap(), l);
        let b = Biact::regular(s.clone());
        let parsed = parse_biact(&write_biact(&b), s.clone(), s.clone()).unwrap();
        assert_eq!(parsed.left(), b.left());
        assert_eq!(parsed.right(), b.right());
        assert_eq!(act_header("act bi 3\n").unwrap(), (ActKind::Bi, 3));
        assert!(matches!(
            parse_left_act(&write_right_act(&r), s),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn small_formats() {
        assert_eq!(parse_morphism("morphism 3\n0 1\n2\n").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_morphism(&write_morphism(&[1, 0])).unwrap(), vec![1, 0]);
        assert!(matches!(
            parse_morphism("morphism 1\n0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!(parse_pairing("pairing 1 2\n0 1\n", 2).unwrap(), (1, 2, vec![0, 1]));
        assert_eq!(parse_rees(&write_rees(2, 1, &[0, 1]), 2).unwrap(), (2, 1, vec![0, 1]));
        assert!(matches!(parse_rees("rees 0 1\n", 2), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn pair_descriptor() {
        let text = "pair\nsemigroup z2.sgp\nleft a.act\nright b.act\npairing 2 2\n0 1\n1 0\n";
        let d = parse_pair_descriptor(text).unwrap();
        assert_eq!(d.semigroup, "z2.sgp");
        assert_eq!((d.a_size, d.b_size), (2, 2));
        assert_eq!(d.table, vec![0, 1, 1, 0]);
        assert!(matches!(
            parse_pair_descriptor("pair\nsemigroup z\nright b\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }
}
