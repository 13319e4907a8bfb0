//! Grayscale rasters, binary PGM (P5) I/O and resampling transforms.

use std::fmt::Write as _;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ImageError {
    #[error("malformed PGM: {0}")]
    MalformedPgm(String),
    #[error("invalid transform: {0}")]
    InvalidTransform(String),
}

/// Row-major 8-bit grayscale image. `comments` are carried through PGM
/// headers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
    pub comments: Vec<String>,
}

impl Image {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Self {
        assert_eq!(width * height, pixels.len(), "pixel buffer does not match dimensions");
        Image {
            width,
            height,
            pixels,
            comments: Vec::new(),
        }
    }

    pub fn filled(width: usize, height: usize, value: u8) -> Self {
        Image::new(width, height, vec![value; width * height])
    }

    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> u8) -> Self {
        let mut pixels = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                pixels.push(f(x, y));
            }
        }
        Image::new(width, height, pixels)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: u8) {
        self.pixels[y * self.width + x] = v;
    }

    /// Columns `x0..x1` as a new image.
    pub fn crop_columns(&self, x0: usize, x1: usize) -> Image {
        assert!(x0 < x1 && x1 <= self.width, "column range out of bounds");
        Image::from_fn(x1 - x0, self.height, |x, y| self.get(x0 + x, y))
    }

    /// Cyclic horizontal shift: output column `x` is input column `x - s`.
    pub fn shift_columns(&self, s: usize) -> Image {
        let w = self.width;
        Image::from_fn(w, self.height, |x, y| self.get((x + w - s % w) % w, y))
    }
}

fn malformed(msg: impl Into<String>) -> ImageError {
    ImageError::MalformedPgm(msg.into())
}

/// Reads a single binary PGM. Pixel values with `maxval < 255` are rescaled
/// to the full 8-bit range.
pub fn read_pgm(bytes: &[u8]) -> Result<Image, ImageError> {
    if bytes.len() < 2 || &bytes[..2] != b"P5" {
        return Err(malformed("expected P5 magic number"));
    }
    let mut pos = 2;
    let mut comments = Vec::new();
    let mut fields = [0usize; 3];
    for field in fields.iter_mut() {
        // whitespace and comments
        loop {
            match bytes.get(pos) {
                Some(b) if b.is_ascii_whitespace() => pos += 1,
                Some(b'#') => {
                    let end = bytes[pos..]
                        .iter()
                        .position(|&b| b == b'\n')
                        .map_or(bytes.len(), |i| pos + i);
                    let text = String::from_utf8_lossy(&bytes[pos + 1..end]);
                    comments.push(text.strip_prefix(' ').unwrap_or(&text).to_string());
                    pos = end;
                }
                Some(_) => break,
                None => return Err(malformed("truncated header")),
            }
        }
        let start = pos;
        while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
            pos += 1;
        }
        if start == pos {
            return Err(malformed("expected a decimal header field"));
        }
        let text = std::str::from_utf8(&bytes[start..pos]).map_err(|_| malformed("bad header"))?;
        *field = text.parse().map_err(|_| malformed("header field out of range"))?;
    }
    let [width, height, maxval] = fields;
    if width == 0 || height == 0 {
        return Err(malformed("zero dimension"));
    }
    if maxval == 0 || maxval > 255 {
        return Err(malformed(format!("unsupported maxval {maxval}")));
    }
    match bytes.get(pos) {
        Some(b) if b.is_ascii_whitespace() => pos += 1,
        _ => return Err(malformed("missing whitespace after maxval")),
    }
    let n = width.checked_mul(height).ok_or_else(|| malformed("dimensions overflow"))?;
    let data = &bytes[pos..];
    if data.len() < n {
        return Err(malformed(format!("expected {n} pixel bytes, found {}", data.len())));
    }
    if data.len() > n {
        return Err(malformed("trailing data after the image"));
    }
    let mut pixels = Vec::with_capacity(n);
    for &v in data {
        if v as usize > maxval {
            return Err(malformed(format!("pixel value {v} exceeds maxval {maxval}")));
        }
        pixels.push(if maxval == 255 {
            v
        } else {
            ((v as usize * 255 * 2 + maxval) / (2 * maxval)) as u8
        });
    }
    let mut img = Image::new(width, height, pixels);
    img.comments = comments;
    Ok(img)
}

/// Canonical P5 encoding: magic, one `#` line per comment, dimensions,
/// maxval 255, raster.
pub fn write_pgm(img: &Image) -> Vec<u8> {
    let mut header = String::from("P5\n");
    for c in &img.comments {
        let _ = writeln!(header, "# {}", c.replace(['\n', '\r'], " "));
    }
    let _ = write!(header, "{} {}\n255\n", img.width, img.height);
    let mut out = header.into_bytes();
    out.extend_from_slice(&img.pixels);
    out
}

/// Resampling operations for invariance experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    ScaleUniform(Scalar),
    ScaleX(Scalar),
    ScaleY(Scalar),
    /// `(x, y) ↦ (x + k·(y − y_mid), y)`, wrapped horizontally.
    ShearX(Scalar),
}

impl Transform {
    pub fn parse(op: &str, k: Scalar) -> Result<Transform, ImageError> {
        let t = match op {
            "scale_uniform" => Transform::ScaleUniform(k),
            "scale_x" => Transform::ScaleX(k),
            "scale_y" => Transform::ScaleY(k),
            "shear_x" => Transform::ShearX(k),
            _ => return Err(ImageError::InvalidTransform(format!("unknown operation `{op}`"))),
        };
        Ok(t)
    }
}

/// Nearest-neighbour source index for output index `i` under scale `k`:
/// `floor((i + ½) / k)`.
fn nearest_source(i: usize, k: Scalar, len: usize) -> usize {
    let src = (Scalar::from(2 * i + 1) / (k * 2)).floor();
    (src.max(0) as usize).min(len - 1)
}

fn scaled_len(len: usize, k: Scalar) -> usize {
    ((Scalar::from(len) * k).round_half_up().max(1)) as usize
}

fn scale(img: &Image, kx: Scalar, ky: Scalar) -> Result<Image, ImageError> {
    if !kx.is_positive() || !ky.is_positive() {
        return Err(ImageError::InvalidTransform("scale factor must be positive".into()));
    }
    let w = scaled_len(img.width, kx);
    let h = scaled_len(img.height, ky);
    let xs: Vec<usize> = (0..w).map(|x| nearest_source(x, kx, img.width)).collect();
    let ys: Vec<usize> = (0..h).map(|y| nearest_source(y, ky, img.height)).collect();
    Ok(Image::from_fn(w, h, |x, y| img.get(xs[x], ys[y])))
}

/// Horizontal shear about the middle row. The strip is treated as cyclic, so
/// the output keeps the input size; row offsets are rounded half away from
/// zero, which keeps the per-row shifts odd-symmetric about the midline.
fn shear_x(img: &Image, k: Scalar) -> Image {
    let w = img.width as i128;
    let shifts: Vec<i128> = (0..img.height)
        .map(|y| {
            // y − y_mid with y_mid = (height − 1)/2
            let dy = Scalar::new(2 * y as i128 - (img.height as i128 - 1), 2);
            (k * dy).round_half_away()
        })
        .collect();
    Image::from_fn(img.width, img.height, |x, y| {
        let src = (x as i128 - shifts[y]).rem_euclid(w);
        img.get(src as usize, y)
    })
}

pub fn transform_image(img: &Image, op: Transform) -> Result<Image, ImageError> {
    let mut out = match op {
        Transform::ScaleUniform(k) => scale(img, k, k)?,
        Transform::ScaleX(k) => scale(img, k, Scalar::ONE)?,
        Transform::ScaleY(k) => scale(img, Scalar::ONE, k)?,
        Transform::ShearX(k) => shear_x(img, k),
    };
    out.comments = img.comments.clone();
    Ok(out)
}
