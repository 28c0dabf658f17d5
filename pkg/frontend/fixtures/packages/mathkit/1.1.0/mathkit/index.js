function clamp(v, lo, hi) {
  return Math.min(Math.max(v, lo), hi);
}
function sum(xs) {
  var s = 0;
  for (var i = 0; i < xs.length; i++) { s += xs[i]; }
  return s;
}
function mean(xs) {
  return xs.length === 0 ? 0 : sum(xs) / xs.length;
}
function spread(xs) {
  var hi = xs[0];
  var lo = xs[0];
  for (var i = 1; i < xs.length; i++) {
    if (xs[i] > hi) { hi = xs[i]; }
    if (xs[i] < lo) { lo = xs[i]; }
  }
  return hi - lo;
}
function median(xs) {
  var s = xs.slice().sort(function (a, b) { return a - b; });
  var mid = Math.floor(s.length / 2);
  return s.length % 2 === 1 ? s[mid] : (s[mid - 1] + s[mid]) / 2;
}
function toNumber(value) {
  if (typeof value === 'number') { return value; }
  var parsed = parseFloat(String(value));
  return isNaN(parsed) ? 0 : parsed;
}
function round(value, places) {
  var factor = Math.pow(10, places || 0);
  return Math.round(value * factor) / factor;
}
function range(start, stop, step) {
  var out = [];
  var s = step || 1;
  for (var v = start; s > 0 ? v < stop : v > stop; v += s) {
    out.push(v);
  }
  return out;
}
function variance(xs) {
  if (xs.length < 2) { return 0; }
  var m = mean(xs);
  var acc = 0;
  for (var i = 0; i < xs.length; i++) {
    acc += (xs[i] - m) * (xs[i] - m);
  }
  return acc / (xs.length - 1);
}

module.exports = { clamp: clamp, sum: sum, mean: mean, spread: spread, median: median };
