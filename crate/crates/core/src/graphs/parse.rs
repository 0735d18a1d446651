//! Edge-list files and the construction expression language.
//!
//! ```text
//! expr  := atom | "W(" expr ")" | "W" int "(" expr ")"
//!        | "W*(" expr ")" | "W*" int "(" expr ")"
//!        | "B(" expr ("," expr)+ ")"
//! atom  := ("C" | "K" | "P" | "S" | "T") int | "T:" shape
//! shape := ("P" | "S") int | "[" int ("," int)* "]"
//! ```
//!
//! Whitespace is ignored. `Tn` is the path on `n` vertices.

use crate::error::{Error, Result};
use crate::graphs::{bridge, star_whisker, star_whisker_complete, whisker, Graph};

/// Parse the `n m` / `u v` edge-list format. `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line, message: &str| Error::EdgeList {
        line,
        message: message.to_string(),
    };
    let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(line, "expected two integers"));
        }
        let a = fields[0].parse().map_err(|_| err(line, "not a non-negative integer"))?;
        let b = fields[1].parse().map_err(|_| err(line, "not a non-negative integer"))?;
        Ok((a, b))
    };
    let (line, header) = lines.next().ok_or_else(|| err(1, "missing header line"))?;
    let (n, m) = pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = line;
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        if !(1 <= u && u < v && v <= n) {
            return Err(err(line, &format!("edge must satisfy 1 <= u < v <= {n}")));
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(err(
            last_line,
            &format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn parse_construct(expr: &str) -> Result<Graph> {
    let mut p = Parser {
        chars: expr.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
        pos: 0,
        len: expr.len(),
    };
    let g = p.expr()?;
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(g)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(i, _)| i)
    }

    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.offset(),
            message: message.to_string(),
        }
    }

    fn range(&self, at: usize, message: String) -> Error {
        log::debug!("parameter error at offset {at}");
        Error::ParameterOutOfRange(format!("at position {at}: {message}"))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += usize::from(c.is_some());
        c
    }

    fn expect(&mut self, want: char) -> Result<()> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{want}'")))
        }
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.pos;
        let mut value: usize = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as usize))
                .ok_or_else(|| self.error("integer too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        Ok(value)
    }

    fn expr(&mut self) -> Result<Graph> {
        let at = self.offset();
        match self.bump() {
            Some('C') => {
                let n = self.int()?;
                Graph::cycle(n).map_err(|e| self.range(at, e.to_string()))
            }
            Some('K') => {
                let n = self.int()?;
                Graph::complete(n).map_err(|e| self.range(at, e.to_string()))
            }
            Some('P') => {
                let n = self.int()?;
                Graph::path(n).map_err(|e| self.range(at, e.to_string()))
            }
            Some('S') => {
                let n = self.int()?;
                Graph::star(n).map_err(|e| self.range(at, e.to_string()))
            }
            Some('T') => self.tree(at),
            Some('W') => self.whiskered(at),
            Some('B') => {
                self.expect('(')?;
                let mut parts = vec![self.expr()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    parts.push(self.expr()?);
                }
                if parts.len() < 2 {
                    return Err(self.error("bridge needs at least two graphs"));
                }
                self.expect(')')?;
                bridge(&parts)
            }
            Some(_) => {
                self.pos -= 1;
                Err(self.error("unknown construction"))
            }
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn tree(&mut self, at: usize) -> Result<Graph> {
        if self.peek() != Some(':') {
            let n = self.int()?;
            return Graph::path(n).map_err(|e| self.range(at, e.to_string()));
        }
        self.pos += 1;
        match self.bump() {
            Some('P') => {
                let n = self.int()?;
                Graph::path(n).map_err(|e| self.range(at, e.to_string()))
            }
            Some('S') => {
                let n = self.int()?;
                Graph::star(n).map_err(|e| self.range(at, e.to_string()))
            }
            Some('[') => {
                let mut seq = Vec::new();
                if self.peek() != Some(']') {
                    seq.push(self.int()?);
                    while self.peek() == Some(',') {
                        self.pos += 1;
                        seq.push(self.int()?);
                    }
                }
                self.expect(']')?;
                Graph::from_prufer(&seq).map_err(|e| self.range(at, e.to_string()))
            }
            _ => {
                self.pos -= 1;
                Err(self.error("expected tree shape 'P', 'S' or '['"))
            }
        }
    }

    fn whiskered(&mut self, at: usize) -> Result<Graph> {
        let star = self.peek() == Some('*');
        if star {
            self.pos += 1;
        }
        let k = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.int()?
        } else {
            1
        };
        if k == 0 {
            return Err(self.range(at, "whisker depth must be at least 1".into()));
        }
        self.expect('(')?;
        let g = if star && self.peek() == Some('K') {
            let k_at = self.offset();
            self.pos += 1;
            let n = self.int()?;
            star_whisker_complete(n, k).map_err(|e| self.range(k_at, e.to_string()))?
        } else {
            let inner = self.expr()?;
            if star {
                star_whisker(&inner, k)?
            } else {
                whisker(&inner, k)?
            }
        };
        self.expect(')')?;
        Ok(g)
    }
}
