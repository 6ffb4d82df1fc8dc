use serde::{Deserialize, Serialize};

use crate::{RenderError, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Palette {
    pub positive: String,
    pub negative: String,
    pub trajectory: String,
    pub tree: String,
}

impl Default for Palette {
    fn default() -> Self {
        Self {
            positive: "#c6dbef".into(),
            negative: "#fcbba1".into(),
            trajectory: "#08306b".into(),
            tree: "#238b45".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum ViewBox {
    /// Fit the drawing with a margin.
    Auto,
    Explicit { min_x: f64, min_y: f64, width: f64, height: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RenderOptions {
    pub width_px: u32,
    pub stroke_width: f64,
    pub palette: Palette,
    pub show_tiling: bool,
    pub show_tree: bool,
    pub view_box: ViewBox,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            width_px: 800,
            stroke_width: 0.02,
            palette: Palette::default(),
            show_tiling: true,
            show_tree: false,
            view_box: ViewBox::Auto,
        }
    }
}

impl RenderOptions {
    pub fn validate(&self) -> Result<()> {
        if self.width_px == 0 {
            return Err(RenderError::InvalidOptions("widthPx must be positive".into()));
        }
        if !(self.stroke_width > 0.0) {
            return Err(RenderError::InvalidOptions("strokeWidth must be positive".into()));
        }
        Ok(())
    }
}
