function Cache(limit) {
  this.limit = limit;
  this.keys = [];
  this.values = {};
}
Cache.prototype.get = function (key) {
  if (!(key in this.values)) { return undefined; }
  return this.values[key];
};
Cache.prototype.set = function (key, value) {
  if (!(key in this.values)) {
    this.keys.push(key);
    if (this.keys.length > this.limit) {
      var oldest = this.keys.shift();
      delete this.values[oldest];
    }
  }
  this.values[key] = value;
};
Cache.prototype.has = function (key) {
  if (key in this.values) { return true; }
  return false;
};
Cache.prototype.remove = function (key) {
  if (!(key in this.values)) { return false; }
  delete this.values[key];
  var at = this.keys.indexOf(key);
  if (at !== -1) { this.keys.splice(at, 1); }
  return true;
};
Cache.prototype.clear = function () {
  this.keys = [];
  this.values = {};
};
Cache.prototype.getOr = function (key, compute) {
  if (key in this.values) { return this.values[key]; }
  var value = compute(key);
  this.set(key, value);
  return value;
};
Cache.prototype.forEach = function (fn) {
  for (var i = 0; i < this.keys.length; i++) {
    fn(this.values[this.keys[i]], this.keys[i]);
  }
};

module.exports = { Cache: Cache };
