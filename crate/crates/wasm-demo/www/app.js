import init, { check_scene, contact_form, almost_contact } from "./pkg/geolab_wasm.js";

const $ = (id) => document.getElementById(id);

function esc(s) {
  return s.replace(/[&<>]/g, (c) => ({ "&": "&amp;", "<": "&lt;", ">": "&gt;" })[c]);
}

function render(target, json) {
  const r = JSON.parse(json);
  if (r.error) {
    $(target).innerHTML = `<p class="err">${esc(r.error.message)}</p>`;
    return;
  }
  const rows = r.checks.map((c) => {
    const lines = [...c.witness.map((w) => "witness: " + w), ...c.certificate.map((w) => "cert: " + w)];
    return `<tr><td>${esc(c.name)}</td><td class="${c.verdict}">${c.verdict}</td>` +
      `<td><pre>${esc(lines.join("\n"))}</pre></td></tr>`;
  });
  $(target).innerHTML = `<table><tr><th>check</th><th>verdict</th><th>details</th></tr>${rows.join("")}</table>`;
}

await init();

$("run-contact").onclick = () => render("out-contact", contact_form($("eta").value));
$("run-normal").onclick = () =>
  render("out-normal", almost_contact($("phix").value, $("phiy").value, $("xi").value, $("ac-eta").value));
$("run-scene").onclick = () => {
  const seed = Number($("seed").value) >>> 0;
  render("out-scene", check_scene($("scene").value, seed, 3));
};
