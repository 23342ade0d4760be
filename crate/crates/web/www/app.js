import init, { analyze_complex, hilbert_and_lie, reduce_word } from "./pkg/graphprod_web.js";

const $ = (id) => document.getElementById(id);

function show(el, json) {
  const v = JSON.parse(json);
  el.classList.toggle("error", "error" in v);
  el.textContent = "error" in v ? v.error : JSON.stringify(v, null, 1);
  return "error" in v ? null : v;
}

function drawBars(canvas, series) {
  const ctx = canvas.getContext("2d");
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  const n = Math.max(...series.map((s) => s.values.length));
  const top = Math.max(1, ...series.flatMap((s) => s.values.map(Math.log1p)));
  const slot = (width - 40) / n;
  const bar = slot / (series.length + 1);
  ctx.font = "11px sans-serif";
  ctx.fillStyle = "#555";
  for (let i = 0; i < n; i++) ctx.fillText(String(i + series[0].offset), 30 + i * slot + bar / 2, height - 4);
  series.forEach((s, k) => {
    ctx.fillStyle = s.color;
    s.values.forEach((v, i) => {
      const h = (Math.log1p(v) / top) * (height - 30);
      ctx.fillRect(30 + i * slot + k * bar, height - 16 - h, bar - 1, h);
    });
    ctx.fillText(s.label, width - 120, 14 + 14 * k);
  });
}

function dims() {
  const v = show($("series"), hilbert_and_lie($("complex").value, $("algebra").value, +$("p").value, +$("degree").value));
  if (!v) return;
  const series = [{ label: "algebra (log)", color: "#4a7bd0", offset: 1, values: v.hilbert.slice(1).map(Number) }];
  if (v.lie) series.push({ label: "Lie algebra (log)", color: "#d07a4a", offset: 1, values: v.lie.map(Number) });
  drawBars($("chart"), series);
}

await init();
$("complex").value = $("preset").value;
$("preset").onchange = () => { $("complex").value = $("preset").value; };
$("analyze").onclick = () => show($("analysis"), analyze_complex($("complex").value));
$("dims").onclick = dims;
$("reduce").onclick = () => show($("reduced"), reduce_word($("complex").value, +$("order").value, $("word").value));
