//! Parsing of list-valued flags. Positions in errors are character offsets
//! into the flag value.

use bott_kit::{Error, NodeSet, Result, Weight};

fn items(s: &str, sep: char) -> impl Iterator<Item = (usize, &str)> {
    let mut offset = 0;
    s.split(sep).map(move |part| {
        let start = offset + (part.len() - part.trim_start().len());
        offset += part.len() + sep.len_utf8();
        (start, part.trim())
    })
}

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// A comma list of 1-based simple-root indices. The empty string is the
/// empty set.
pub fn index_set(s: &str, rank: usize) -> Result<NodeSet> {
    let mut set = NodeSet::EMPTY;
    if s.trim().is_empty() {
        return Ok(set);
    }
    for (pos, item) in items(s, ',') {
        let k: usize = item
            .parse()
            .map_err(|_| parse_error(pos, format!("expected a simple-root index, found {item:?}")))?;
        if k == 0 || k > rank {
            return Err(parse_error(pos, format!("index {k} is outside 1..={rank}")));
        }
        if set.contains(k - 1) {
            return Err(parse_error(pos, format!("index {k} is repeated")));
        }
        set.insert(k - 1);
    }
    Ok(set)
}

pub fn int_list(s: &str) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    items(s, ',')
        .map(|(pos, item)| {
            item.parse()
                .map_err(|_| parse_error(pos, format!("expected an integer, found {item:?}")))
        })
        .collect()
}

pub fn weight(s: &str, rank: usize) -> Result<Weight> {
    let c = int_list(s)?;
    if c.len() != rank {
        return Err(Error::DimensionMismatch {
            expected: rank,
            found: c.len(),
        });
    }
    Ok(Weight::from_ints(&c))
}

/// Semicolon-separated weights, e.g. `"0,-2,0,0; 1,0,0,0"`.
pub fn weights(s: &str, rank: usize) -> Result<Vec<Weight>> {
    items(s, ';')
        .map(|(pos, item)| {
            weight(item, rank).map_err(|e| match e {
                Error::Parse { position, message } => parse_error(pos + position, message),
                other => other,
            })
        })
        .collect()
}

/// `lo:hi` for every coordinate, or a comma list with one `lo:hi` per
/// coordinate.
pub fn bounds(s: &str, rank: usize) -> Result<Vec<(i64, i64)>> {
    let parsed = items(s, ',')
        .map(|(pos, item)| {
            let (lo, hi) = item
                .split_once(':')
                .ok_or_else(|| parse_error(pos, format!("expected lo:hi, found {item:?}")))?;
            let num = |x: &str| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| parse_error(pos, format!("expected an integer bound in {item:?}")))
            };
            let (lo, hi) = (num(lo)?, num(hi)?);
            if lo > hi {
                return Err(parse_error(pos, format!("empty range {lo}:{hi}")));
            }
            Ok((lo, hi))
        })
        .collect::<Result<Vec<_>>>()?;
    match parsed.len() {
        1 => Ok(vec![parsed[0]; rank]),
        n if n == rank => Ok(parsed),
        n => Err(Error::DimensionMismatch { expected: rank, found: n }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_sets() {
        assert_eq!(index_set("", 4).unwrap(), NodeSet::EMPTY);
        assert_eq!(index_set(" 1, 3,4", 4).unwrap(), [0, 2, 3].into_iter().collect());
        assert_eq!(
            index_set("1,5", 4),
            Err(Error::Parse {
                position: 2,
                message: "index 5 is outside 1..=4".into()
            })
        );
        assert!(matches!(index_set("1,x", 4), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(index_set("2,2", 4), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(index_set("0", 4), Err(Error::Parse { position: 0, .. })));
    }

    #[test]
    fn weight_lists() {
        assert_eq!(weight("-1, 0", 2).unwrap(), Weight::from_ints(&[-1, 0]));
        assert!(matches!(weight("1", 2), Err(Error::DimensionMismatch { .. })));
        let ws = weights("0,-2; 1,x", 2);
        assert!(matches!(ws, Err(Error::Parse { position: 8, .. })));
        assert_eq!(weights("0,-2;1,0", 2).unwrap().len(), 2);
    }

    #[test]
    fn bound_lists() {
        assert_eq!(bounds("-4:4", 3).unwrap(), vec![(-4, 4); 3]);
        assert_eq!(bounds("-1:0, 2:3", 2).unwrap(), vec![(-1, 0), (2, 3)]);
        assert!(matches!(bounds("3:1", 2), Err(Error::Parse { .. })));
        assert!(matches!(bounds("0:1,0:1", 3), Err(Error::DimensionMismatch { .. })));
    }
}
