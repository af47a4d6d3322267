//! The `.cfs` factor-set text format.
//!
//! ```text
//! K: 2 2
//! Q: 4            (inline order, followed by the table) or Q: path/to/q.loop
//! 0 1 2 3
//! ...
//! theta:
//! <|Q| lines, each the images of θ_x on 0..|K|-1>
//! f:
//! <|Q| lines of |Q| linear indices of K>
//! ```
//!
//! A `Q:` path is resolved relative to the directory of the `.cfs` file.

use std::path::Path;

use crate::abelian::{AbelianGroup, ThetaMap};
use crate::error::{parse_err, Result};
use crate::extension::FactorSet;
use crate::table::{parse_index_row, LoopTable};

struct Lines<'a> {
    inner: Box<dyn Iterator<Item = (usize, &'a str)> + 'a>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let inner = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        Lines { inner: Box::new(inner), last: 0 }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.inner.next() {
            Some((ln, l)) => {
                self.last = ln;
                Ok((ln, l))
            }
            None => Err(parse_err(self.last + 1, format!("unexpected end of input, expected {what}"))),
        }
    }

    fn header(&mut self, key: &str) -> Result<(usize, &'a str)> {
        let (ln, l) = self.next(key)?;
        let rest = l
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix(':'))
            .ok_or_else(|| parse_err(ln, format!("expected `{key}:`")))?;
        Ok((ln, rest.trim()))
    }

    fn rows(&mut self, count: usize, what: &str) -> Result<Vec<Vec<usize>>> {
        (0..count)
            .map(|_| {
                let (ln, l) = self.next(what)?;
                parse_index_row(l, ln)
            })
            .collect()
    }
}

/// Parses a `.cfs` document. Shapes are checked; cocycle conditions are not.
pub fn parse_cfs(text: &str, base_dir: Option<&Path>) -> Result<FactorSet> {
    let mut lines = Lines::new(text);
    let (ln, k_spec) = lines.header("K")?;
    let factors = parse_index_row(k_spec, ln)?;
    let k = AbelianGroup::new(factors).map_err(|e| parse_err(ln, e.to_string()))?;

    let (ln, q_spec) = lines.header("Q")?;
    let q = match q_spec.parse::<usize>() {
        Ok(n) => LoopTable::from_rows(&lines.rows(n, "a row of Q")?)?,
        Err(_) => {
            if q_spec.is_empty() {
                return Err(parse_err(ln, "`Q:` needs an order or a path"));
            }
            let path = base_dir.map_or_else(|| Path::new(q_spec).to_path_buf(), |d| d.join(q_spec));
            let text = std::fs::read_to_string(&path)
                .map_err(|e| parse_err(ln, format!("cannot read {}: {e}", path.display())))?;
            LoopTable::parse(&text)?
        }
    };

    let (ln, rest) = lines.header("theta")?;
    if !rest.is_empty() {
        return Err(parse_err(ln, "unexpected data after `theta:`"));
    }
    let theta_rows = lines.rows(q.order(), "a theta row")?;
    let theta = ThetaMap::from_images(&k, &q, theta_rows)?;

    let (ln, rest) = lines.header("f")?;
    if !rest.is_empty() {
        return Err(parse_err(ln, "unexpected data after `f:`"));
    }
    let f = lines.rows(q.order(), "a row of f")?;
    if let Ok((ln, _)) = lines.next("") {
        return Err(parse_err(ln, "trailing data after f"));
    }
    FactorSet::new(k, q, theta, f)
}

/// Reads a `.cfs` file, resolving a `Q:` path relative to it.
pub fn read_cfs(path: &Path) -> Result<FactorSet> {
    let text = std::fs::read_to_string(path)?;
    parse_cfs(&text, path.parent())
}

fn join_row(row: &[usize]) -> String {
    row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Renders with an inline `Q` table.
pub fn render_cfs(fs: &FactorSet) -> String {
    let mut out = format!("K: {}\nQ: {}\n", join_row(fs.k().factors()), fs.q().order());
    for row in fs.q().rows() {
        out.push_str(&join_row(&row));
        out.push('\n');
    }
    out.push_str("theta:\n");
    for m in fs.theta().maps() {
        out.push_str(&join_row(m.images()));
        out.push('\n');
    }
    out.push_str("f:\n");
    for row in fs.f_rows() {
        out.push_str(&join_row(&row));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::extension::nklein_factor_set;

    #[test]
    fn round_trip() {
        let fs = nklein_factor_set().into_inner();
        let text = render_cfs(&fs);
        assert_eq!(parse_cfs(&text, None).unwrap(), fs);
    }

    #[test]
    fn q_from_file() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("q.loop"), crate::groups::klein().to_loop_string()).unwrap();
        let text = "K: 3\nQ: q.loop\ntheta:\n0 1 2\n0 1 2\n0 1 2\n0 1 2\nf:\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n";
        let p = dir.path().join("zero.cfs");
        std::fs::write(&p, text).unwrap();
        let fs = read_cfs(&p).unwrap();
        assert_eq!(fs.k().order(), 3);
        assert!(fs.validate().is_ok());
    }

    #[test]
    fn errors_carry_lines() {
        assert!(matches!(parse_cfs("K: 2\n", None), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_cfs("Q: 1\n", None), Err(Error::Parse { line: 1, .. })));
        let bad_theta = "K: 2\nQ: 1\n0\ntheta:\n0 0\nf:\n0\n";
        assert_eq!(parse_cfs(bad_theta, None), Err(Error::NotAPermutation));
        let extra = "K: 2\nQ: 1\n0\ntheta:\n0 1\nf:\n0\n0\n";
        assert!(matches!(parse_cfs(extra, None), Err(Error::Parse { line: 8, .. })));
    }
}
