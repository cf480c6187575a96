import init, { boundaryImage, aThetaCurve, starlikeProfile, membership } from "./pkg/univalent_wasm.js";

const $ = (id) => document.getElementById(id);

// xs, ys in data units; fits the box with a small margin, y up
function plot(canvas, xs, ys, { closed = false, equal = false, zeroLine = false } = {}) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  ctx.clearRect(0, 0, w, h);
  let [x0, x1] = [Math.min(...xs), Math.max(...xs)];
  let [y0, y1] = [Math.min(...ys), Math.max(...ys)];
  if (zeroLine) { y0 = Math.min(y0, 0); y1 = Math.max(y1, 0); }
  let sx = (w * 0.9) / (x1 - x0 || 1);
  let sy = (h * 0.9) / (y1 - y0 || 1);
  if (equal) sx = sy = Math.min(sx, sy);
  const cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
  const px = (x) => w / 2 + (x - cx) * sx;
  const py = (y) => h / 2 - (y - cy) * sy;

  ctx.strokeStyle = "#bbb";
  ctx.beginPath();
  ctx.moveTo(0, py(0)); ctx.lineTo(w, py(0));
  if (equal) { ctx.moveTo(px(0), 0); ctx.lineTo(px(0), h); }
  ctx.stroke();

  ctx.strokeStyle = "#036";
  ctx.beginPath();
  xs.forEach((x, i) => (i ? ctx.lineTo(px(x), py(ys[i])) : ctx.moveTo(px(x), py(ys[i]))));
  if (closed) ctx.closePath();
  ctx.stroke();
}

function split(flat) {
  const a = [], b = [];
  for (let i = 0; i < flat.length; i += 2) { a.push(flat[i]); b.push(flat[i + 1]); }
  return [a, b];
}

function guarded(errId, fn) {
  return () => {
    $(errId).textContent = "";
    try { fn(); } catch (e) { $(errId).textContent = e.message ?? String(e); }
  };
}

const drawBoundary = guarded("b-err", () => {
  const [re, im] = split(boundaryImage($("b-src").value, +$("b-r").value, 4096));
  plot($("b-canvas"), re, im, { closed: true, equal: true });
});

const drawA = guarded("a-err", () => {
  const [t, a] = split(aThetaCurve($("a-var").value, +$("a-n").value, 2000));
  plot($("a-canvas"), t, a, { zeroLine: true });
});

const drawStarlike = guarded("s-err", () => {
  const src = $("s-src").value, r = +$("s-r").value;
  const [t, v] = split(starlikeProfile(src, r, 8192));
  plot($("s-canvas"), t, v, { zeroLine: true });
  const min = Math.min(...v);
  $("s-report").textContent =
    `min Re(zf'/f) = ${min.toPrecision(6)} at theta = ${t[v.indexOf(min)].toPrecision(6)}\n` +
    membership(src, $("s-class").value, r, 4096);
});

await init();
$("b-go").onclick = drawBoundary;
$("a-go").onclick = drawA;
$("s-go").onclick = drawStarlike;
drawBoundary();
drawA();
drawStarlike();
