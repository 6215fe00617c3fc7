//! SVG 1.1 figures. Coordinates are exact until formatting, where each is
//! rounded to the configured number of decimals; the y axis is flipped.

use std::fmt::Write as _;

use crate::brocard_pipeline::{compute_configuration, Configuration};
use crate::exact_geom::{pedal_feet, Circle, Point, Scalar};
use crate::scene_gen::Scene;

pub const LAYERS: [&str; 5] = ["base", "miquel", "triangles", "brocard-circle", "steiner"];
pub const DEFAULT_DIGITS: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    pub layers: Vec<String>,
    pub digits: usize,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { layers: LAYERS.iter().map(|s| s.to_string()).collect(), digits: DEFAULT_DIGITS }
    }
}

enum Shape {
    Dot { label: String, at: Point },
    Ring { label: String, circle: Circle },
    Polygon { label: String, vertices: Vec<Point> },
    Segment { label: String, from: Point, to: Point },
}

struct Layer {
    id: &'static str,
    shapes: Vec<Shape>,
    note: Option<String>,
}

fn dot(label: &str, at: &Point) -> Shape {
    Shape::Dot { label: label.to_string(), at: at.clone() }
}

fn polygon(label: &str, vertices: &[&Point]) -> Shape {
    Shape::Polygon { label: label.to_string(), vertices: vertices.iter().map(|p| (*p).clone()).collect() }
}

/// The two pedal feet of `pt` farthest apart, spanning its Simson line.
fn simson_segment(s: &Scene, pt: &Point, label: &str) -> Option<Shape> {
    let feet = pedal_feet(pt, &s.a, &s.b, &s.c).ok()?;
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let &(i, j) = pairs.iter().max_by(|x, y| {
        feet[x.0].dist2(&feet[x.1]).cmp(&feet[y.0].dist2(&feet[y.1]))
    })?;
    Some(Shape::Segment { label: label.to_string(), from: feet[i].clone(), to: feet[j].clone() })
}

fn layer_shapes(id: &str, s: &Scene, cfg: &Configuration) -> Vec<Shape> {
    match id {
        "miquel" => vec![dot("P", &cfg.p), dot("Q", &cfg.q)],
        "triangles" => vec![
            polygon("T_AT_BT_C", &[&cfg.t_a, &cfg.t_b, &cfg.t_c]),
            polygon("A'B'C'", &[&cfg.a_prime, &cfg.b_prime, &cfg.c_prime]),
            dot("T_A", &cfg.t_a),
            dot("T_B", &cfg.t_b),
            dot("T_C", &cfg.t_c),
            dot("A'", &cfg.a_prime),
            dot("B'", &cfg.b_prime),
            dot("C'", &cfg.c_prime),
        ],
        "brocard-circle" => vec![
            Shape::Ring { label: "Brocard circle".into(), circle: cfg.brocard_circle.clone() },
            Shape::Segment { label: "OR".into(), from: s.o.clone(), to: cfg.r.clone() },
            dot("O", &s.o),
            dot("R", &cfg.r),
        ],
        "steiner" => {
            let mut shapes: Vec<Shape> = [
                simson_segment(s, &cfg.steiner, "Simson line of S_t"),
                simson_segment(s, &cfg.tarry, "Simson line of T_a"),
            ]
            .into_iter()
            .flatten()
            .collect();
            shapes.push(Shape::Ring { label: "circumcircle".into(), circle: cfg.circumcircle.clone() });
            shapes.push(dot("S_t", &cfg.steiner));
            shapes.push(dot("T_a", &cfg.tarry));
            shapes
        }
        _ => Vec::new(),
    }
}

fn base_shapes(s: &Scene) -> Vec<Shape> {
    let mut shapes = vec![
        polygon("ABC", &[&s.a, &s.b, &s.c]),
        Shape::Ring { label: "Γ".into(), circle: s.gamma.clone() },
    ];
    for (label, p) in [("A", &s.a), ("B", &s.b), ("C", &s.c)] {
        shapes.push(dot(label, p));
    }
    for (label, p) in s.incidence_points() {
        shapes.push(dot(&label.to_uppercase(), p));
    }
    shapes
}

/// Text shown next to a point: primes become `′`.
fn display(label: &str) -> String {
    label.replace('\'', "′")
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

struct Frame {
    min_x: Scalar,
    max_y: Scalar,
    width: Scalar,
    height: Scalar,
    digits: usize,
}

impl Frame {
    fn fit(layers: &[Layer], digits: usize) -> Frame {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        let pad = Scalar::from_bigints(1.into(), num_bigint::BigInt::from(10u32).pow(digits as u32));
        for shape in layers.iter().flat_map(|l| &l.shapes) {
            match shape {
                Shape::Dot { at, .. } => {
                    xs.push(at.x.clone());
                    ys.push(at.y.clone());
                }
                Shape::Ring { circle, .. } => {
                    let c = circle.center();
                    let r = circle.radius2().sqrt_floor(digits).unwrap_or_default() + &pad;
                    xs.extend([&c.x - &r, &c.x + &r]);
                    ys.extend([&c.y - &r, &c.y + &r]);
                }
                Shape::Polygon { vertices, .. } => {
                    for v in vertices {
                        xs.push(v.x.clone());
                        ys.push(v.y.clone());
                    }
                }
                Shape::Segment { from, to, .. } => {
                    xs.extend([from.x.clone(), to.x.clone()]);
                    ys.extend([from.y.clone(), to.y.clone()]);
                }
            }
        }
        let bounds = |v: &[Scalar]| {
            let lo = v.iter().min().cloned().unwrap_or_else(|| Scalar::from_int(-1));
            let hi = v.iter().max().cloned().unwrap_or_else(|| Scalar::from_int(1));
            (lo, hi)
        };
        let (lo_x, hi_x) = bounds(&xs);
        let (lo_y, hi_y) = bounds(&ys);
        let span = |lo: &Scalar, hi: &Scalar| {
            let w = hi - lo;
            if w.is_zero() { Scalar::one() } else { w }
        };
        let (w, h) = (span(&lo_x, &hi_x), span(&lo_y, &hi_y));
        let tenth = Scalar::ratio(1, 10);
        let (mx, my) = (&w * &tenth, &h * &tenth);
        Frame {
            min_x: &lo_x - &mx,
            max_y: &hi_y + &my,
            width: &w + &(&mx + &mx),
            height: &h + &(&my + &my),
            digits,
        }
    }

    fn num(&self, s: &Scalar) -> String {
        s.to_decimal(self.digits)
    }

    fn x(&self, p: &Point) -> String {
        self.num(&p.x)
    }

    /// Flipped ordinate.
    fn y(&self, p: &Point) -> String {
        self.num(&-&p.y)
    }

    fn unit(&self) -> Scalar {
        std::cmp::max(self.width.clone(), self.height.clone())
    }
}

fn write_shape(out: &mut String, f: &Frame, shape: &Shape) {
    let style = "vector-effect=\"non-scaling-stroke\"";
    match shape {
        Shape::Dot { label, at } => {
            let r = f.unit() * Scalar::ratio(1, 150);
            let offset = f.unit() * Scalar::ratio(1, 100);
            let font = f.unit() * Scalar::ratio(1, 30);
            let lx = &at.x + &offset;
            let ly = -&(&at.y + &offset);
            let label = escape(label);
            let _ = writeln!(
                out,
                "    <circle class=\"point\" data-label=\"{label}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                f.x(at),
                f.y(at),
                f.num(&r)
            );
            let _ = writeln!(
                out,
                "    <text class=\"label\" data-label=\"{label}\" x=\"{}\" y=\"{}\" font-size=\"{}\">{}</text>",
                f.num(&lx),
                f.num(&ly),
                f.num(&font),
                escape(&display(&label))
            );
        }
        Shape::Ring { label, circle } => {
            let c = circle.center();
            let r = circle.radius2().sqrt_floor(f.digits).unwrap_or_default();
            let _ = writeln!(
                out,
                "    <circle class=\"circle\" data-label=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"black\" {style}/>",
                escape(label),
                f.x(&c),
                f.y(&c),
                f.num(&r)
            );
        }
        Shape::Polygon { label, vertices } => {
            let pts: Vec<String> = vertices.iter().map(|v| format!("{},{}", f.x(v), f.y(v))).collect();
            let _ = writeln!(
                out,
                "    <polygon class=\"triangle\" data-label=\"{}\" points=\"{}\" fill=\"none\" stroke=\"black\" {style}/>",
                escape(label),
                pts.join(" ")
            );
        }
        Shape::Segment { label, from, to } => {
            let _ = writeln!(
                out,
                "    <line class=\"segment\" data-label=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" {style}/>",
                escape(label),
                f.x(from),
                f.y(from),
                f.x(to),
                f.y(to)
            );
        }
    }
}

/// Renders the requested layers of `s`. Layers that need the configuration
/// are replaced by a comment when it cannot be built.
pub fn render_svg(s: &Scene, opts: &RenderOptions) -> String {
    let cfg = compute_configuration(s);
    let mut layers = Vec::new();
    for id in LAYERS.iter().filter(|id| opts.layers.iter().any(|l| l == *id)) {
        let layer = match (*id, &cfg) {
            ("base", _) => Layer { id, shapes: base_shapes(s), note: None },
            (_, Ok(cfg)) => Layer { id, shapes: layer_shapes(id, s, cfg), note: None },
            (_, Err(e)) => Layer { id, shapes: Vec::new(), note: Some(e.to_string()) },
        };
        layers.push(layer);
    }
    let f = Frame::fit(&layers, opts.digits);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        f.num(&f.min_x),
        f.num(&-&f.max_y),
        f.num(&f.width),
        f.num(&f.height)
    );
    for layer in &layers {
        let _ = writeln!(out, "  <g id=\"layer-{}\">", layer.id);
        if let Some(note) = &layer.note {
            let _ = writeln!(out, "    <!-- unavailable: {} -->", escape(note).replace("--", "- -"));
        }
        for shape in &layer.shapes {
            write_shape(&mut out, &f, shape);
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::q;
    use crate::scene_gen::{generate_scene, incentric_collapse_scene, SceneParams};

    #[test]
    fn all_layers_label_key_points() {
        let s = generate_scene(&SceneParams::with_seed(7)).unwrap();
        let svg = render_svg(&s, &RenderOptions::default());
        for label in ["P", "Q", "O", "R", "T_A", "A'", "S_t", "T_a"] {
            assert!(svg.contains(&format!("data-label=\"{label}\"")), "{label}");
        }
        assert!(svg.contains(">A′</text>"));
        assert!(svg.starts_with("<?xml") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn single_layer_is_minimal() {
        let s = generate_scene(&SceneParams::with_seed(7)).unwrap();
        let opts = RenderOptions { layers: vec!["brocard-circle".into()], digits: 4 };
        let svg = render_svg(&s, &opts);
        assert_eq!(svg.matches("<g ").count(), 1);
        assert!(!svg.contains("data-label=\"P\""));
        assert!(svg.contains("data-label=\"R\""));
    }

    #[test]
    fn digits_and_flip() {
        let s = incentric_collapse_scene();
        let opts = RenderOptions { layers: vec!["base".into()], digits: 2 };
        let svg = render_svg(&s, &opts);
        // C = (0, 3) is drawn at y = −3
        assert!(svg.contains("cx=\"0.00\" cy=\"-3.00\""));
        assert_eq!(q(1, 3).to_decimal(DEFAULT_DIGITS), "0.333333333");
    }

    #[test]
    fn collapsed_scene_notes_missing_layers() {
        let svg = render_svg(&incentric_collapse_scene(), &RenderOptions::default());
        assert!(svg.contains("unavailable: configuration collapses"));
    }
}
