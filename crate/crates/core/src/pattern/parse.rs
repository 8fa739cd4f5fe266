//! Text notation for vincular and arrow patterns.
//!
//! ```text
//! pattern := '^'? group* '$'? arrows?
//! group   := entry | '[' entry+ ']'
//! arrows  := '{' b '->' c (',' b '->' c)* '}'
//! ```
//!
//! Entries inside one bracket are bonded to their neighbours. When the text
//! (arrows excluded) contains no comma every digit is its own entry;
//! otherwise entries are decimal numbers separated by commas or whitespace.

use crate::error::{Error, Result};

/// A parsed word with bond and anchor marks, before any validation of what
/// the entries are allowed to be.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RawPattern {
    pub entries: Vec<usize>,
    /// `bonds[i]` joins `entries[i]` and `entries[i + 1]`.
    pub bonds: Vec<bool>,
    pub anchor_first: bool,
    pub anchor_last: bool,
    pub arrows: Vec<(usize, usize)>,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

pub(crate) fn parse_raw(text: &str) -> Result<RawPattern> {
    let (body, arrows) = match text.find('{') {
        Some(open) => {
            let arrows = parse_arrows(&text[open..], open)?;
            (&text[..open], arrows)
        }
        None => (text, Vec::new()),
    };
    let comma_mode = body.contains(',');
    let bytes = body.as_bytes();

    let mut entries = Vec::new();
    let mut bonds: Vec<bool> = Vec::new();
    let mut anchor_first = false;
    let mut anchor_last = false;
    let mut in_bracket: Option<usize> = None;
    let mut bracket_len = 0;
    let mut i = 0;

    let push = |entries: &mut Vec<usize>, bonds: &mut Vec<bool>, v: usize, bonded: bool| {
        if !entries.is_empty() {
            bonds.push(bonded);
        }
        entries.push(v);
    };

    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            '^' => {
                if i != body.len() - body.trim_start().len() || anchor_first {
                    return Err(err(i, "'^' must open the pattern"));
                }
                anchor_first = true;
                i += 1;
            }
            '$' => {
                if !body[i + 1..].trim().is_empty() {
                    return Err(err(i, "'$' must close the pattern"));
                }
                if in_bracket.is_some() {
                    return Err(err(i, "'$' inside brackets"));
                }
                anchor_last = true;
                i += 1;
            }
            '[' => {
                if in_bracket.is_some() {
                    return Err(err(i, "nested '['"));
                }
                in_bracket = Some(i);
                bracket_len = 0;
                i += 1;
            }
            ']' => {
                if in_bracket.is_none() {
                    return Err(err(i, "unmatched ']'"));
                }
                if bracket_len == 0 {
                    return Err(err(i, "empty brackets"));
                }
                in_bracket = None;
                i += 1;
            }
            ',' | ' ' | '\t' => i += 1,
            d if d.is_ascii_digit() => {
                let (v, len) = if comma_mode {
                    let len = bytes[i..].iter().take_while(|b| b.is_ascii_digit()).count();
                    let v = body[i..i + len]
                        .parse::<usize>()
                        .map_err(|_| err(i, "number too large"))?;
                    (v, len)
                } else {
                    ((bytes[i] - b'0') as usize, 1)
                };
                let bonded = in_bracket.is_some() && bracket_len > 0;
                push(&mut entries, &mut bonds, v, bonded);
                if in_bracket.is_some() {
                    bracket_len += 1;
                }
                i += len;
            }
            other => return Err(err(i, format!("unexpected character {other:?}"))),
        }
    }
    if let Some(open) = in_bracket {
        return Err(err(open, "unclosed '['"));
    }
    if entries.is_empty() {
        return Err(err(0, "pattern has no entries"));
    }
    Ok(RawPattern {
        entries,
        bonds,
        anchor_first,
        anchor_last,
        arrows,
    })
}

fn parse_arrows(text: &str, offset: usize) -> Result<Vec<(usize, usize)>> {
    let close = text.find('}').ok_or_else(|| err(offset, "unclosed '{'"))?;
    if !text[close + 1..].trim().is_empty() {
        return Err(err(offset + close + 1, "text after arrow list"));
    }
    let mut arrows = Vec::new();
    let mut pos = offset + 1;
    for item in text[1..close].split(',') {
        let (b, c) = item
            .split_once("->")
            .ok_or_else(|| err(pos, format!("expected 'b->c', found {:?}", item.trim())))?;
        let num = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| err(pos, format!("bad arrow index {:?}", s.trim())))
        };
        arrows.push((num(b)?, num(c)?));
        pos += item.len() + 1;
    }
    Ok(arrows)
}
