//! The tangle input language.
//!
//! ```text
//! # comment
//! name: conway-f
//! braid: s1 s2^-1 s1
//! close: 3
//! ```
//!
//! Tokens are `s1`, `s2`, `s1^-1`, `s2^-1`, whitespace-separated; `braid:`
//! may be empty (the identity tangle).  `close:` names the strand (1-3)
//! whose top is joined to its own bottom around the side of the braid.

use std::fmt;

/// A parsed 2-tangle program.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleProgram {
    pub name: String,
    /// `(generator index in {1, 2}, sign)` read bottom to top.
    pub word: Vec<(u8, i8)>,
    /// Closed strand position, 1-based.
    pub closed: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// How the closure pairs the four open endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TanglePairing {
    /// Top-left to bottom-left, top-right to bottom-right.
    Pure,
    /// The open strands swap sides.
    Transposed,
    /// The closed string forms its own circle component.
    WithCircle,
}

impl TangleProgram {
    /// Permutation of strand positions induced by the braid word
    /// (bottom position `i` ends at `perm[i]`), 0-based.
    pub fn permutation(&self) -> [usize; 3] {
        let mut perm = [0usize, 1, 2];
        for (g, _) in &self.word {
            // strand currently at position g-1 swaps with position g
            let p = (*g - 1) as usize;
            perm.swap(p, p + 1);
        }
        // perm here maps final position -> start; invert for start -> end.
        let mut out = [0usize; 3];
        for (end, start) in perm.iter().enumerate() {
            out[*start] = end;
        }
        out
    }

    /// Endpoint pairing after closing the designated strand.
    pub fn pairing(&self) -> TanglePairing {
        let perm = self.permutation();
        let c = (self.closed - 1) as usize;
        if perm[c] == c {
            return TanglePairing::WithCircle;
        }
        // Follow the open strand leaving the first open bottom position.
        let open: Vec<usize> = (0..3).filter(|&i| i != c).collect();
        let mut pos = open[0];
        let mut top = perm[pos];
        while top == c {
            pos = c;
            top = perm[pos];
        }
        if top == open[0] {
            TanglePairing::Pure
        } else {
            TanglePairing::Transposed
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.word.len()
    }

    /// Stable content key used for evaluation caches.
    pub fn content_key(&self) -> String {
        let mut s = String::new();
        for (g, sign) in &self.word {
            s.push_str(&format!("s{}{};", g, if *sign > 0 { "+" } else { "-" }));
        }
        s.push_str(&format!("c{}", self.closed));
        s
    }
}

/// Parse the tangle language; errors carry line and column.
pub fn parse_tangle(text: &str) -> Result<TangleProgram, ParseError> {
    let mut name = String::new();
    let mut word: Option<Vec<(u8, i8)>> = None;
    let mut closed: Option<u8> = None;
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let Some((key, rest)) = line.split_once(':') else {
            return Err(ParseError {
                line: line_no,
                col: 1,
                msg: "expected `key: value`".into(),
            });
        };
        match key.trim() {
            "name" => name = rest.trim().to_string(),
            "braid" => {
                let mut w = Vec::new();
                let base = key.len() + 1;
                let mut col = base;
                for tok in rest.split_whitespace() {
                    // column of this token within the raw line
                    col = raw[col..].find(tok).map(|o| col + o).unwrap_or(col) + 1;
                    let tok_col = col;
                    col += tok.len() - 1;
                    let (g, sign) = match tok {
                        "s1" => (1u8, 1i8),
                        "s2" => (2, 1),
                        "s1^-1" => (1, -1),
                        "s2^-1" => (2, -1),
                        other => {
                            return Err(ParseError {
                                line: line_no,
                                col: tok_col,
                                msg: format!(
                                    "unknown token `{other}` (expected s1, s2, s1^-1, s2^-1)"
                                ),
                            });
                        }
                    };
                    w.push((g, sign));
                }
                word = Some(w);
            }
            "close" => {
                let v = rest.trim();
                let idx: u8 = v.parse().map_err(|_| ParseError {
                    line: line_no,
                    col: key.len() + 2,
                    msg: format!("bad strand index `{v}`"),
                })?;
                if !(1..=3).contains(&idx) {
                    return Err(ParseError {
                        line: line_no,
                        col: key.len() + 2,
                        msg: format!("strand index {idx} out of range 1..=3"),
                    });
                }
                closed = Some(idx);
            }
            other => {
                return Err(ParseError {
                    line: line_no,
                    col: 1,
                    msg: format!("unknown key `{other}`"),
                });
            }
        }
    }
    let Some(word) = word else {
        return Err(ParseError { line: 1, col: 1, msg: "missing `braid:` line".into() });
    };
    let Some(closed) = closed else {
        return Err(ParseError { line: 1, col: 1, msg: "missing `close:` line".into() });
    };
    Ok(TangleProgram { name, word, closed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_program() {
        let t = parse_tangle("name: x\nbraid: s1 s2^-1\nclose: 3\n").unwrap();
        assert_eq!(t.name, "x");
        assert_eq!(t.word, vec![(1, 1), (2, -1)]);
        assert_eq!(t.closed, 3);
    }

    #[test]
    fn empty_braid_is_identity_tangle() {
        let t = parse_tangle("braid:\nclose: 3\n").unwrap();
        assert!(t.word.is_empty());
        assert_eq!(t.pairing(), TanglePairing::WithCircle);
    }

    #[test]
    fn rejects_unknown_generator() {
        let err = parse_tangle("braid: s3\nclose: 3\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.msg.contains("s3"));
    }

    #[test]
    fn rejects_bad_strand_index() {
        let err = parse_tangle("braid: s1\nclose: 4\n").unwrap_err();
        assert!(err.msg.contains("out of range"));
    }

    #[test]
    fn comments_and_columns() {
        let err = parse_tangle("# header\nbraid: s1 sX s2\nclose: 1\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.col, 11);
    }

    #[test]
    fn permutation_and_pairing() {
        // sigma_2^3 leaves strand 1 alone and swaps 2, 3.
        let t = parse_tangle("braid: s2 s2 s2\nclose: 3\n").unwrap();
        assert_eq!(t.permutation(), [0, 2, 1]);
        assert_eq!(t.pairing(), TanglePairing::Pure);
        // closing strand 1 of the same braid leaves a separate circle
        let t2 = parse_tangle("braid: s2 s2 s2\nclose: 1\n").unwrap();
        assert_eq!(t2.pairing(), TanglePairing::WithCircle);
        // a transposing tangle: sigma_1 sigma_2 sends 1 -> 3
        let t3 = parse_tangle("braid: s1 s2\nclose: 1\n").unwrap();
        assert_eq!(t3.permutation(), [2, 0, 1]);
        assert_eq!(t3.pairing(), TanglePairing::Transposed);
    }
}
