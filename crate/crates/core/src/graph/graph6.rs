use super::{Graph, GraphError, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> GraphError {
    GraphError::Graph6 { offset, message: message.into() }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing line
/// terminator are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (body, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (line.as_bytes(), 0),
    };

    let Some(&first) = body.first() else {
        return Err(err(base, "empty input"));
    };
    if !(63..=126).contains(&first) {
        return Err(err(base, format!("byte {first:#04x} is outside the graph6 range 63..=126")));
    }
    if first == 126 {
        return Err(err(base, format!("multi-byte size form exceeds the {MAX_VERTICES}-vertex limit")));
    }
    let n = (first - 63) as usize;

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let data = &body[1..];
    if data.len() < nbytes {
        return Err(err(
            base + body.len(),
            format!("expected {nbytes} edge bytes for {n} vertices, found {}", data.len()),
        ));
    }
    if data.len() > nbytes {
        return Err(err(base + 1 + nbytes, "trailing bytes after edge data"));
    }

    let mut rows = vec![0u64; n];
    let mut k = 0;
    for (i, &byte) in data.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(err(
                base + 1 + i,
                format!("byte {byte:#04x} is outside the graph6 range 63..=126"),
            ));
        }
        let chunk = byte - 63;
        for shift in (0..6).rev() {
            if k >= nbits {
                if chunk >> shift & 1 == 1 {
                    return Err(err(base + 1 + i, "nonzero padding bits"));
                }
                continue;
            }
            if chunk >> shift & 1 == 1 {
                let (a, b) = bit_position(k);
                rows[a] |= 1 << b;
                rows[b] |= 1 << a;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(rows))
}

/// Maps the k-th bit of the upper triangle (column-major) to `(i, j)`, `i < j`.
fn bit_position(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    out
}

/// Parses a multi-line graph6 stream, skipping blank lines. Errors carry the
/// 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, GraphError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim_end()).map_err(|e| (i + 1, e)))
        .collect()
}
