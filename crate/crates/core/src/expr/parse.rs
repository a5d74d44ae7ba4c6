//! Recursive-descent parsers for the two expression grammars. Whitespace is
//! insignificant between tokens and `#` starts a comment running to the end
//! of the line.

use crate::digraph::Label;

use super::{CwExpr, CwExpression, DiCoExpr, DiCoExpression, ExprError};

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> ExprError {
        ExprError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.bytes.get(self.pos) {
            if c.is_ascii_whitespace() {
                self.pos += 1;
            } else if c == b'#' {
                while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else {
                break;
            }
        }
    }

    /// Next significant byte without consuming it.
    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ExprError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// `[A-Za-z_][A-Za-z0-9_]*`
    fn name(&mut self) -> Result<String, ExprError> {
        self.skip_ws();
        let start = self.pos;
        match self.bytes.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => self.pos += 1,
            _ => return Err(self.err("expected a name")),
        }
        while let Some(c) = self.bytes.get(self.pos) {
            if c.is_ascii_alphanumeric() || *c == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
    }

    fn int(&mut self) -> Result<Label, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_digit())
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| self.err("integer too large"))
    }
}

/// Parses a clique-width expression, optionally preceded by a `k=INT`
/// header; without the header, `k` is the maximum label mentioned.
pub fn parse_cw(text: &str) -> Result<CwExpression, ExprError> {
    let mut cur = Cursor::new(text);
    let mut header_k = None;
    let before = {
        cur.skip_ws();
        cur.pos
    };
    if cur.peek() == Some(b'k') {
        cur.pos += 1;
        if cur.peek() == Some(b'=') {
            cur.pos += 1;
            header_k = Some(cur.int()?);
        } else {
            cur.pos = before;
        }
    }
    let root = cw_expr(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.err("unexpected trailing input"));
    }
    match header_k {
        Some(k) => CwExpression::new(k, root),
        None => CwExpression::infer(root),
    }
}

fn cw_expr(cur: &mut Cursor) -> Result<CwExpr, ExprError> {
    cur.skip_ws();
    let kw_pos = cur.pos;
    let kw = cur.name()?;
    cur.expect(b'(')?;
    let node = match kw.as_str() {
        "v" => {
            let name = cur.name()?;
            cur.expect(b',')?;
            let label = cur.int()?;
            CwExpr::Create { name, label }
        }
        "union" => {
            let left = Box::new(cw_expr(cur)?);
            cur.expect(b',')?;
            let right = Box::new(cw_expr(cur)?);
            CwExpr::Union { left, right }
        }
        "add" | "rel" => {
            let from = cur.int()?;
            cur.expect(b',')?;
            let to = cur.int()?;
            cur.expect(b',')?;
            let child = Box::new(cw_expr(cur)?);
            if kw == "add" {
                CwExpr::EdgeInsert { from, to, child }
            } else {
                CwExpr::Relabel { from, to, child }
            }
        }
        _ => {
            return Err(ExprError::Syntax {
                pos: kw_pos,
                msg: format!("unknown operation {kw:?}, expected v/union/add/rel"),
            })
        }
    };
    cur.expect(b')')?;
    Ok(node)
}

/// Parses a co-graph expression.
pub fn parse_dico(text: &str) -> Result<DiCoExpression, ExprError> {
    let mut cur = Cursor::new(text);
    let root = dico_expr(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.err("unexpected trailing input"));
    }
    DiCoExpression::new(root)
}

fn dico_expr(cur: &mut Cursor) -> Result<DiCoExpr, ExprError> {
    cur.skip_ws();
    let kw_pos = cur.pos;
    let kw = cur.name()?;
    cur.expect(b'(')?;
    let node = match kw.as_str() {
        "v" => DiCoExpr::Vertex { name: cur.name()? },
        "union" | "series" | "order" => {
            let left = Box::new(dico_expr(cur)?);
            cur.expect(b',')?;
            let right = Box::new(dico_expr(cur)?);
            match kw.as_str() {
                "union" => DiCoExpr::Union { left, right },
                "series" => DiCoExpr::Series { left, right },
                _ => DiCoExpr::Order { left, right },
            }
        }
        "dunion" => {
            let left = Box::new(dico_expr(cur)?);
            cur.expect(b',')?;
            let right = Box::new(dico_expr(cur)?);
            cur.expect(b',')?;
            cur.expect(b'[')?;
            let mut arcs: Vec<(String, String)> = Vec::new();
            if cur.peek() != Some(b']') {
                loop {
                    let from = cur.name()?;
                    cur.expect(b'>')?;
                    let to = cur.name()?;
                    let arc = (from, to);
                    if !arcs.contains(&arc) {
                        arcs.push(arc);
                    }
                    if cur.peek() == Some(b',') {
                        cur.pos += 1;
                    } else {
                        break;
                    }
                }
            }
            cur.expect(b']')?;
            DiCoExpr::DUnion { left, right, arcs }
        }
        _ => {
            return Err(ExprError::Syntax {
                pos: kw_pos,
                msg: format!("unknown operation {kw:?}, expected v/union/series/order/dunion"),
            })
        }
    };
    cur.expect(b')')?;
    Ok(node)
}
