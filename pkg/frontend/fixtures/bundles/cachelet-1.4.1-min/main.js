(function(){var t={582:function(t){function e(t){this.limit=t;this.keys=[];this.values={}}e.prototype.get=function(t){if(!(t in this.values)){return undefined}return this.values[t]};e.prototype.set=function(t,e){if(!(t in this.values)){this.keys.push(t);if(this.keys.length>this.limit){var s=this.keys.shift();delete this.values[s]}}this.values[t]=e};e.prototype.has=function(t){return t in this.values};e.prototype.stats=function(){var t=this.keys.length;return{used:t,free:this.limit-t,limit:this.limit}};e.prototype.remove=function(t){if(!(t in this.values)){return false}delete this.values[t];var e=this.keys.indexOf(t);if(e!==-1){this.keys.splice(e,1)}return true};e.prototype.clear=function(){this.keys=[];this.values={}};e.prototype.getOr=function(t,e){if(t in this.values){return this.values[t]}var s=e(t);this.set(t,s);return s};e.prototype.forEach=function(t){for(var e=0;e<this.keys.length;e++){t(this.values[this.keys[e]],this.keys[e])}};t.exports={Cache:e}}};var e={};function s(i){var r=e[i];if(r!==undefined){return r.exports}var n=e[i]={exports:{}};t[i](n,n.exports,s);return n.exports}var i=s(582);console.log(i)})();