function Emitter() {
  this.handlers = {};
}
Emitter.prototype.on = function (name, fn) {
  if (!this.handlers[name]) { this.handlers[name] = []; }
  this.handlers[name].push(fn);
  return this;
};
Emitter.prototype.emit = function (name, payload) {
  var fns = this.handlers[name] || [];
  for (var i = 0; i < fns.length; i++) { fns[i](payload); }
  return fns.length;
};
Emitter.prototype.listenerCount = function (name) {
  if (!this.handlers[name]) { return 0; }
  return this.handlers[name].length;
};
Emitter.prototype.names = function () {
  var out = [];
  for (var name in this.handlers) {
    if (this.handlers[name].length > 0) { out.push(name); }
  }
  return out;
};
Emitter.prototype.clear = function (name) {
  if (name === undefined) {
    this.handlers = {};
  } else {
    delete this.handlers[name];
  }
  return this;
};
Emitter.prototype.pipe = function (name, target, targetName) {
  return this.on(name, function (payload) {
    target.emit(targetName === undefined ? name : targetName, payload);
  });
};

module.exports = { Emitter: Emitter };
