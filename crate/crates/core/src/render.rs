//! Deterministic SVG drawings of Ford circles, continued fraction chains and
//! tangent witnesses.
//!
//! All geometry is computed with exact rationals and only converted to text
//! at the very end, with six fixed decimals, so tangencies survive and the
//! output is byte-for-byte reproducible. Mathematical `[lo, hi]` maps onto
//! `[0, width]`; `y` uses the same scale and is flipped so the real axis is
//! the bottom edge.

use std::fmt::Write;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ford::{ford_circle, FordCircle};
use crate::rational::{fractions_in, Rational};
use crate::real::RealNumber;
use crate::verify::{cf_chain, statement_v_witness};

const DIGITS: u32 = 6;
const FIELD_STROKE: &str = "#9e9e9e";
const HIGHLIGHT_STROKE: &str = "#000000";
const ALPHA_STROKE: &str = "#c62828";
const INTERVAL_STROKE: &str = "#1565c0";

#[derive(Clone, Debug)]
pub struct RenderSpec {
    pub lo: Rational,
    pub hi: Rational,
    pub max_den: u64,
    pub width_px: u32,
    /// Bases of circles drawn in the highlight stroke.
    pub highlight: Vec<Rational>,
    /// Point marked on the axis.
    pub annotate: Option<RealNumber>,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            lo: Rational::zero(),
            hi: Rational::one(),
            max_den: 20,
            width_px: 800,
            highlight: Vec::new(),
            annotate: None,
        }
    }
}

impl RenderSpec {
    pub fn window(lo: Rational, hi: Rational) -> Self {
        RenderSpec {
            lo,
            hi,
            ..RenderSpec::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.lo >= self.hi {
            return Err(Error::InvalidRenderSpec(format!("empty window {}..{}", self.lo, self.hi)));
        }
        if self.max_den < 1 {
            return Err(Error::InvalidRenderSpec("max denominator must be at least 1".into()));
        }
        if self.width_px < 64 {
            return Err(Error::InvalidRenderSpec(format!("width {} is below 64 px", self.width_px)));
        }
        Ok(())
    }

    fn scale(&self) -> Rational {
        Rational::new(self.width_px, 1).expect("nonzero")
            .checked_div(&(&self.hi - &self.lo))
            .expect("validated window")
    }
}

fn px(v: &Rational) -> String {
    v.to_fixed(DIGITS)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('"', "&quot;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Accumulates SVG elements in a fixed pixel frame.
struct Canvas {
    lo: Rational,
    scale: Rational,
    width: Rational,
    height: Rational,
    body: String,
}

impl Canvas {
    fn new(spec: &RenderSpec, tallest: &Rational) -> Self {
        let scale = spec.scale();
        Canvas {
            lo: spec.lo.clone(),
            width: Rational::from(i64::from(spec.width_px)),
            height: tallest * &scale,
            scale,
            body: String::new(),
        }
    }

    fn x(&self, t: &Rational) -> Rational {
        (t - &self.lo) * &self.scale
    }

    fn y(&self, h: &Rational) -> Rational {
        &self.height - &(h * &self.scale)
    }

    fn open_group(&mut self, class: &str, stroke: &str, stroke_width: u32) {
        writeln!(
            self.body,
            r#"<g class="{class}" fill="none" stroke="{stroke}" stroke-width="{stroke_width}">"#
        )
        .unwrap();
    }

    fn close_group(&mut self) {
        self.body.push_str("</g>\n");
    }

    fn circle(&mut self, c: &FordCircle) {
        let r = c.radius() * &self.scale;
        writeln!(
            self.body,
            r#"<circle data-base="{}" cx="{}" cy="{}" r="{}"/>"#,
            c.base(),
            px(&self.x(c.base())),
            px(&self.y(c.radius())),
            px(&r)
        )
        .unwrap();
    }

    fn line(&mut self, x1: &Rational, y1: &Rational, x2: &Rational, y2: &Rational) {
        writeln!(
            self.body,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            px(x1),
            px(y1),
            px(x2),
            px(y2)
        )
        .unwrap();
    }

    fn axis(&mut self) {
        self.open_group("axis", "#000000", 1);
        let (zero, w, h) = (Rational::zero(), self.width.clone(), self.height.clone());
        self.line(&zero, &h, &w, &h);
        self.close_group();
    }

    /// Vertical tick at `α`, placed to within display precision.
    fn alpha_marker(&mut self, alpha: &RealNumber) -> Result<()> {
        // A convergent p/q is within 1/q² of α; q² > 10^7 · scale keeps the
        // pixel error below the printed precision.
        let needed = (self.scale.mul_int(&BigInt::from(10_000_000u64)).floor() + 1u32).sqrt() + 1u32;
        let at = alpha.approximation(&needed)?;
        let x = self.x(&at);
        let tick = Rational::from(12);
        writeln!(
            self.body,
            r#"<g class="alpha" data-alpha="{}" fill="none" stroke="{ALPHA_STROKE}" stroke-width="2">"#,
            escape(&alpha.describe())
        )
        .unwrap();
        let (h, top) = (self.height.clone(), &self.height - &tick);
        self.line(&x, &h, &x, &top);
        self.close_group();
        Ok(())
    }

    fn finish(self, metadata: &str) -> String {
        let (w, h) = (px(&self.width), px(&self.height));
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
        )
        .unwrap();
        out.push_str(metadata);
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

fn largest_diameter<'a>(circles: impl IntoIterator<Item = &'a FordCircle>) -> Rational {
    circles
        .into_iter()
        .map(|c| c.radius().mul_int(&BigInt::from(2)))
        .max()
        .unwrap_or_else(Rational::one)
}

fn draw(spec: &RenderSpec, metadata: &str) -> Result<String> {
    spec.validate()?;
    let field: Vec<FordCircle> = fractions_in(&spec.lo, &spec.hi, spec.max_den).iter().map(ford_circle).collect();
    let highlighted: Vec<FordCircle> = spec.highlight.iter().map(ford_circle).collect();
    let mut canvas = Canvas::new(spec, &largest_diameter(field.iter().chain(&highlighted)));
    canvas.axis();
    canvas.open_group("field", FIELD_STROKE, 1);
    for c in &field {
        canvas.circle(c);
    }
    canvas.close_group();
    if !highlighted.is_empty() {
        canvas.open_group("chain", HIGHLIGHT_STROKE, 2);
        for c in &highlighted {
            canvas.circle(c);
        }
        canvas.close_group();
    }
    if let Some(alpha) = &spec.annotate {
        canvas.alpha_marker(alpha)?;
    }
    Ok(canvas.finish(metadata))
}

/// Every Ford circle with base in `[lo, hi]` and denominator at most
/// `max_den`, ordered by denominator then numerator.
pub fn render_ford_field(spec: &RenderSpec) -> Result<String> {
    let meta = format!(
        "<metadata data-kind=\"field\" data-window=\"{}..{}\" data-max-den=\"{}\"/>\n",
        spec.lo, spec.hi, spec.max_den
    );
    draw(spec, &meta)
}

/// The Ford field in a muted stroke with the first `depth` members of the
/// continued fraction chain of `α` drawn over it.
pub fn render_chain(alpha: &RealNumber, depth: usize, spec: &RenderSpec) -> Result<String> {
    spec.validate()?;
    let chain = cf_chain(alpha, depth)?;
    let mut spec = spec.clone();
    spec.highlight = chain.iter().map(|e| e.circle.base().clone()).collect();
    spec.annotate = Some(alpha.clone());
    let bases: Vec<String> = spec.highlight.iter().map(ToString::to_string).collect();
    let meta = format!(
        "<metadata data-kind=\"chain\" data-alpha=\"{}\" data-chain=\"{}\"/>\n",
        escape(&alpha.describe()),
        bases.join(" ")
    );
    draw(&spec, &meta)
}

/// `C_x`, the tangent witness `C_y`, the open interval between their base
/// points, and `α` on the axis.
pub fn render_statement_v(x: &Rational, alpha: &RealNumber, spec: &RenderSpec) -> Result<String> {
    spec.validate()?;
    let y = statement_v_witness(x, alpha)?.ok_or(Error::StatementVFails)?;
    let (cx, cy) = (ford_circle(x), ford_circle(&y));
    let mut canvas = Canvas::new(spec, &largest_diameter([&cx, &cy]));
    canvas.axis();
    canvas.open_group("interval", INTERVAL_STROKE, 4);
    let h = canvas.height.clone();
    let (x0, x1) = (canvas.x(x), canvas.x(&y));
    canvas.line(&x0, &h, &x1, &h);
    canvas.close_group();
    canvas.open_group("x", HIGHLIGHT_STROKE, 2);
    canvas.circle(&cx);
    canvas.close_group();
    canvas.open_group("witness", HIGHLIGHT_STROKE, 1);
    canvas.circle(&cy);
    canvas.close_group();
    canvas.alpha_marker(alpha)?;
    let meta = format!(
        "<metadata data-kind=\"statement-v\" data-x=\"{x}\" data-alpha=\"{}\" data-witness=\"{y}\"/>\n",
        escape(&alpha.describe())
    );
    Ok(canvas.finish(&meta))
}
