//! Deterministic SVG and ASCII drawings of fronts, and a parser for the
//! ASCII form.
//!
//! Events sit on a uniform horizontal grid and strand positions on integer
//! rows. In ASCII each event is a three-character column: `<` and `>` mark
//! cusps, `X` a crossing, and row `2k` carries strand `k`.

use std::fmt::Write;

use super::{Event, FrontError, FrontResult, FrontWord};

const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"];
const MARGIN: usize = 20;
const COL: usize = 30;
const ROW: usize = 20;

/// Output format of [`render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Svg,
    Ascii,
}

pub fn render(f: &FrontWord, format: Format) -> String {
    match format {
        Format::Svg => render_svg(f),
        Format::Ascii => render_ascii(f),
    }
}

pub fn render_ascii(f: &FrontWord) -> String {
    let rows = (2 * f.width()).max(2) - 1;
    let mut grid = vec![String::new(); rows];
    for (i, &e) in f.events().iter().enumerate() {
        let before = f.stack_before(i).len();
        let mut block = vec!["   "; rows];
        match e {
            Event::L(p) => {
                for s in 0..before + 2 {
                    block[2 * s] = "---";
                }
                block[2 * p] = " /-";
                block[2 * p + 1] = "<  ";
                block[2 * p + 2] = " \\-";
            }
            Event::R(p) => {
                for s in 0..before {
                    block[2 * s] = "---";
                }
                block[2 * p] = "-\\ ";
                block[2 * p + 1] = "  >";
                block[2 * p + 2] = "-/ ";
            }
            Event::X(p) => {
                for s in 0..before {
                    block[2 * s] = "---";
                }
                block[2 * p] = "\\ /";
                block[2 * p + 1] = " X ";
                block[2 * p + 2] = "/ \\";
            }
        }
        for (line, cell) in grid.iter_mut().zip(block) {
            line.push_str(cell);
        }
    }
    let mut out = String::new();
    for line in grid {
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Reads back the output of [`render_ascii`].
pub fn parse_ascii(text: &str) -> FrontResult<FrontWord> {
    let lines: Vec<Vec<char>> = text.lines().map(|l| l.chars().collect()).collect();
    let width = lines.iter().map(Vec::len).max().unwrap_or(0);
    let mut events = vec![];
    for block in 0..width.div_ceil(3) {
        let mut found = None;
        for (row, line) in lines.iter().enumerate() {
            for (col, &ch) in line.iter().enumerate().skip(3 * block).take(3) {
                let event = match ch {
                    '<' => Event::L,
                    '>' => Event::R,
                    'X' => Event::X,
                    _ => continue,
                };
                if row % 2 == 0 || found.is_some() {
                    return Err(FrontError::Ascii(format!("unexpected glyph at row {row}, column {col}")));
                }
                found = Some(event(row / 2));
            }
        }
        events.push(found.ok_or_else(|| FrontError::Ascii(format!("column {block} has no event glyph")))?);
    }
    FrontWord::new(events)
}

pub fn render_svg(f: &FrontWord) -> String {
    let x = |i: usize| MARGIN + i * COL;
    let y = |s: usize| MARGIN + s * ROW;
    let width = 2 * MARGIN + f.len() * COL;
    let height = 2 * MARGIN + f.width().saturating_sub(1) * ROW;
    let color = |arc: usize| PALETTE[f.component_of_arc(arc) % PALETTE.len()];
    let r = ROW / 2;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<g fill="none" stroke-width="2" stroke-linecap="round">"#);
    let line = |out: &mut String, arc: usize, x1: usize, y1: usize, x2: usize, y2: usize| {
        let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{}"/>"#, color(arc));
    };
    for (i, &e) in f.events().iter().enumerate() {
        let before = f.stack_before(i);
        let after = f.stack_before(i + 1);
        let (x0, x1) = (x(i), x(i + 1));
        // Strands passing through the column keep their identity.
        let touched = |s: usize| match e {
            Event::L(_) => false,
            Event::R(p) | Event::X(p) => s == p || s == p + 1,
        };
        for (s, &arc) in before.iter().enumerate() {
            if touched(s) {
                continue;
            }
            let t = after.iter().position(|&a| a == arc).unwrap();
            line(&mut out, arc, x0, y(s), x1, y(t));
        }
        match e {
            Event::L(p) => {
                let _ = writeln!(
                    out,
                    r#"<path d="M {x1} {} A {r} {r} 0 0 0 {x1} {}" stroke="{}"/>"#,
                    y(p),
                    y(p + 1),
                    color(after[p])
                );
            }
            Event::R(p) => {
                let _ = writeln!(
                    out,
                    r#"<path d="M {x0} {} A {r} {r} 0 0 1 {x0} {}" stroke="{}"/>"#,
                    y(p),
                    y(p + 1),
                    color(before[p])
                );
            }
            Event::X(p) => {
                line(&mut out, before[p], x0, y(p), x1, y(p + 1));
                line(&mut out, before[p + 1], x0, y(p + 1), x1, y(p));
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}
