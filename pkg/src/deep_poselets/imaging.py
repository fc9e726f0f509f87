"""Image representation, scale pyramids, similarity warps and jitter.

Images hold row-major intensities in [0, 1]. Pixel centers sit at integer
coordinates; bilinear samples taken outside the grid of pixel centers blend
toward the mid-gray fill value 0.5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CorruptData, ImageTooSmall, InvalidRatio, InvalidTransform, UnsupportedFormat

PATCH_SIDE = 61
FILL_VALUE = 0.5

# Rec. 601 luma weights, fixed for the whole artifact.
LUMA_WEIGHTS = (0.299, 0.587, 0.114)


@dataclass(frozen=True, eq=False)
class Image:
    """Immutable raster: ``pixels`` has shape (height, width, channels)."""

    pixels: np.ndarray

    def __post_init__(self):
        px = np.asarray(self.pixels, dtype=np.float64)
        if px.ndim == 2:
            px = px[:, :, None]
        if px.ndim != 3 or px.shape[2] not in (1, 3):
            raise CorruptData(f"expected (h, w, 1|3) pixel array, got shape {px.shape}")
        if px.size and (px.min() < 0.0 or px.max() > 1.0):
            raise CorruptData("intensities must lie in [0, 1]")
        px.setflags(write=False)
        object.__setattr__(self, "pixels", px)

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def channels(self) -> int:
        return self.pixels.shape[2]

    @property
    def data(self) -> np.ndarray:
        """Row-major flat view of the intensities."""
        return self.pixels.ravel()

    def gray(self) -> np.ndarray:
        """(h, w) luma plane."""
        if self.channels == 1:
            return self.pixels[:, :, 0]
        r, g, b = LUMA_WEIGHTS
        return r * self.pixels[:, :, 0] + g * self.pixels[:, :, 1] + b * self.pixels[:, :, 2]

    def rgb(self) -> np.ndarray:
        """(h, w, 3) pixels, replicating the single plane of grayscale images."""
        if self.channels == 3:
            return self.pixels
        return np.repeat(self.pixels, 3, axis=2)


@dataclass(frozen=True)
class SimilarityTransform:
    """p -> scale * R(rotation) * p + (tx, ty); invertible since scale > 0."""

    scale: float = 1.0
    rotation: float = 0.0
    tx: float = 0.0
    ty: float = 0.0

    def __post_init__(self):
        if not (self.scale > 0.0) or not math.isfinite(self.scale):
            raise InvalidTransform(f"scale must be positive, got {self.scale}")

    def apply(self, points: np.ndarray) -> np.ndarray:
        """Transform an (n, 2) array of (x, y) points."""
        pts = np.asarray(points, dtype=np.float64).reshape(-1, 2)
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        x = self.scale * (c * pts[:, 0] - s * pts[:, 1]) + self.tx
        y = self.scale * (s * pts[:, 0] + c * pts[:, 1]) + self.ty
        return np.stack([x, y], axis=1)

    def apply_point(self, x: float, y: float) -> tuple[float, float]:
        out = self.apply(np.array([[x, y]]))
        return float(out[0, 0]), float(out[0, 1])

    def inverse(self) -> "SimilarityTransform":
        inv_scale = 1.0 / self.scale
        c, s = math.cos(-self.rotation), math.sin(-self.rotation)
        tx = -inv_scale * (c * self.tx - s * self.ty)
        ty = -inv_scale * (s * self.tx + c * self.ty)
        return SimilarityTransform(inv_scale, -self.rotation, tx, ty)

    def compose(self, inner: "SimilarityTransform") -> "SimilarityTransform":
        """Returns self o inner (inner applied first)."""
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        tx = self.scale * (c * inner.tx - s * inner.ty) + self.tx
        ty = self.scale * (s * inner.tx + c * inner.ty) + self.ty
        return SimilarityTransform(self.scale * inner.scale, self.rotation + inner.rotation, tx, ty)


@dataclass(frozen=True)
class JitterConfig:
    """Random similarity perturbations applied around the patch center."""

    max_rotation: float = math.radians(20.0)
    scale_range: tuple[float, float] = (0.7, 1.3)
    max_translation_frac: float = 0.25
    rng_seed: int = 0

    def __post_init__(self):
        lo, hi = self.scale_range
        if not (0.0 < lo <= hi):
            raise InvalidTransform(f"bad scale range {self.scale_range}")
        if not (0.0 <= self.max_translation_frac < 0.5):
            raise InvalidTransform(f"bad translation fraction {self.max_translation_frac}")
        if self.max_rotation < 0.0:
            raise InvalidTransform("max_rotation must be >= 0")


@dataclass(frozen=True)
class ScalePyramid:
    """Ordered levels (scale, image) with scale = ratio**k, level 0 = original."""

    levels: tuple[tuple[float, Image], ...]
    ratio: float


def load_image(path) -> Image:
    """Decode a PNG or binary PGM/PPM file into unit-interval intensities."""
    from PIL import Image as PILImage, UnidentifiedImageError

    try:
        with PILImage.open(path) as im:
            fmt = im.format
            if fmt not in ("PNG", "PPM"):
                raise UnsupportedFormat(f"{path}: format {fmt} not supported (PNG/PGM/PPM only)")
            gray = im.mode in ("1", "L", "I", "I;16")
            try:
                converted = im.convert("L" if gray else "RGB")
                arr = np.asarray(converted, dtype=np.float64)
            except OSError as exc:
                raise CorruptData(f"{path}: {exc}") from exc
    except UnidentifiedImageError as exc:
        raise UnsupportedFormat(f"{path}: not a decodable raster file") from exc
    return Image(arr / 255.0)


def bilinear_sample(pixels: np.ndarray, xs: np.ndarray, ys: np.ndarray, fill: float = FILL_VALUE) -> np.ndarray:
    """Sample (h, w, c) pixels at real coordinates; out-of-grid neighbors contribute ``fill``."""
    h, w = pixels.shape[:2]
    x0 = np.floor(xs)
    y0 = np.floor(ys)
    fx = xs - x0
    fy = ys - y0
    x0 = x0.astype(np.int64)
    y0 = y0.astype(np.int64)

    out = np.zeros(xs.shape + (pixels.shape[2],), dtype=pixels.dtype)
    for dx, dy, wgt in (
        (0, 0, (1.0 - fx) * (1.0 - fy)),
        (1, 0, fx * (1.0 - fy)),
        (0, 1, (1.0 - fx) * fy),
        (1, 1, fx * fy),
    ):
        xc = x0 + dx
        yc = y0 + dy
        valid = (xc >= 0) & (xc < w) & (yc >= 0) & (yc < h)
        vals = pixels[np.clip(yc, 0, h - 1), np.clip(xc, 0, w - 1)]
        vals = np.where(valid[..., None], vals, fill)
        out += wgt[..., None] * vals
    return out


def resize_bilinear(pixels: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    """Bilinear resize with edge clamping and center-aligned sampling."""
    h, w = pixels.shape[:2]
    ys = (np.arange(out_h) + 0.5) * (h / out_h) - 0.5
    xs = (np.arange(out_w) + 0.5) * (w / out_w) - 0.5
    ys = np.clip(ys, 0.0, h - 1.0)
    xs = np.clip(xs, 0.0, w - 1.0)
    gx, gy = np.meshgrid(xs, ys)
    return bilinear_sample(pixels, gx, gy)


def build_pyramid(img: Image, ratio: float, min_side: int = PATCH_SIDE) -> ScalePyramid:
    """Downsample until the next level would drop below ``min_side``."""
    if not (0.0 < ratio < 1.0):
        raise InvalidRatio(f"ratio must lie in (0, 1), got {ratio}")
    if min(img.width, img.height) < min_side:
        raise ImageTooSmall(f"image {img.width}x{img.height} smaller than min side {min_side}")

    levels = [(1.0, img)]
    k = 1
    while True:
        scale = ratio**k
        w = math.floor(img.width * scale)
        h = math.floor(img.height * scale)
        if min(w, h) < min_side:
            break
        levels.append((scale, Image(np.clip(resize_bilinear(img.pixels, h, w), 0.0, 1.0))))
        k += 1
    return ScalePyramid(tuple(levels), ratio)


def warp_patch(img: Image, t: SimilarityTransform, side: int = PATCH_SIDE) -> np.ndarray:
    """Extract a side x side patch; ``t`` maps image coordinates to patch coordinates.

    Each patch pixel q is the bilinear sample of the image at t^-1(q);
    samples beyond the pixel-center grid blend toward 0.5.
    """
    inv = t.inverse()
    qx, qy = np.meshgrid(np.arange(side, dtype=np.float64), np.arange(side, dtype=np.float64))
    pts = inv.apply(np.stack([qx.ravel(), qy.ravel()], axis=1))
    xs = pts[:, 0].reshape(side, side)
    ys = pts[:, 1].reshape(side, side)
    return bilinear_sample(img.pixels, xs, ys)


def jitter_sample(
    img: Image,
    base: SimilarityTransform,
    cfg: JitterConfig,
    index: int = 0,
    side: int = PATCH_SIDE,
) -> tuple[np.ndarray, SimilarityTransform]:
    """Randomly perturbed warp; deterministic given (cfg.rng_seed, index).

    Rotation and scale are applied about the patch center, translation in
    patch pixels. Returns the warped patch and the composed transform.
    """
    rng = np.random.default_rng((int(cfg.rng_seed), int(index)))
    rot = rng.uniform(-cfg.max_rotation, cfg.max_rotation)
    scale = rng.uniform(cfg.scale_range[0], cfg.scale_range[1])
    limit = cfg.max_translation_frac * side
    dx = rng.uniform(-limit, limit)
    dy = rng.uniform(-limit, limit)

    c = 0.5 * (side - 1)
    centered = SimilarityTransform(scale, rot, 0.0, 0.0)
    ccx, ccy = centered.apply_point(c, c)
    perturb = SimilarityTransform(scale, rot, c - ccx + dx, c - ccy + dy)
    composed = perturb.compose(base)
    return warp_patch(img, composed, side), composed
