use super::KnotDiagram;
use crate::error::{Error, Result};

pub(super) fn parse_pd(text: &str) -> Result<KnotDiagram> {
    let trimmed = text.trim();
    if trimmed.eq_ignore_ascii_case("unknot") {
        return Ok(KnotDiagram::unknot());
    }
    if trimmed.is_empty() {
        return Err(Error::parse(text, 0, "empty input; expected `X(a,b,c,d)` terms or `unknot`"));
    }

    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut tuples = Vec::new();

    let skip_separators = |pos: &mut usize| {
        while *pos < bytes.len() && (bytes[*pos].is_ascii_whitespace() || bytes[*pos] == b',') {
            *pos += 1;
        }
    };

    loop {
        skip_separators(&mut pos);
        if pos >= bytes.len() {
            break;
        }
        if bytes[pos] != b'X' {
            return Err(Error::parse(text, pos, "expected `X(`"));
        }
        pos += 1;
        if bytes.get(pos) != Some(&b'(') {
            return Err(Error::parse(text, pos, "expected `(` after `X`"));
        }
        pos += 1;

        let mut tuple = [0u64; 4];
        for (k, slot) in tuple.iter_mut().enumerate() {
            while pos < bytes.len() && bytes[pos] == b' ' {
                pos += 1;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(Error::parse(text, pos, "expected a positive integer edge label"));
            }
            *slot = text[start..pos]
                .parse()
                .map_err(|_| Error::parse(text, start, "edge label out of range"))?;
            while pos < bytes.len() && bytes[pos] == b' ' {
                pos += 1;
            }
            let want = if k == 3 { b')' } else { b',' };
            if bytes.get(pos) != Some(&want) {
                return Err(Error::parse(
                    text,
                    pos,
                    format!("expected `{}`", want as char),
                ));
            }
            pos += 1;
        }
        tuples.push(tuple);
    }

    KnotDiagram::from_pd(&tuples)
}

pub(super) fn serialize(d: &KnotDiagram) -> String {
    if d.crossings.is_empty() {
        return "unknot".to_string();
    }
    d.crossings
        .iter()
        .map(|[a, b, c, e]| format!("X({a},{b},{c},{e})"))
        .collect::<Vec<_>>()
        .join(" ")
}
